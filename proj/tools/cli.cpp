#include "cli.hpp"

#include "mono3sat/bench_gen.hpp"
#include "mono3sat/dimacs.hpp"
#include "mono3sat/oracle.hpp"
#include "mono3sat/reducer.hpp"
#include "mono3sat/validator.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace mono3sat::cli {

namespace {

/// Input problems (unreadable files, malformed DIMACS, profile mismatches).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Io {
public:
  Io(std::istream &in, std::ostream &out) : in_(in), out_(out) {}

  dimacs::Document read(const std::string &path) const {
    try {
      if (path == "-")
        return dimacs::parse(in_);
      return dimacs::parse_file(path);
    } catch (const dimacs::ParseError &e) {
      throw InputError(path + ": " + e.what());
    } catch (const std::runtime_error &e) {
      throw InputError(e.what());
    }
  }

  void write(const std::string &path, const dimacs::Document &doc) const {
    if (path == "-") {
      dimacs::serialize(doc, out_);
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
      throw InputError("cannot open '" + path + "' for writing");
    dimacs::serialize(doc, file);
    if (!file)
      throw InputError("failed writing '" + path + "'");
  }

private:
  std::istream &in_;
  std::ostream &out_;
};

void print_witness(std::ostream &out, const Assignment &a) {
  out << 'v';
  for (const auto &[v, b] : a)
    out << ' ' << (b ? "" : "-") << v.index();
  out << " 0\n";
}

const char *sat_word(bool sat) { return sat ? "SAT" : "UNSAT"; }

struct ReduceOpts {
  std::string target;
  bool compact = false;
  bool trace = false;
  std::string in, out;
};

int cmd_reduce(const ReduceOpts &o, const Io &io, std::ostream &err) {
  const auto doc = io.read(o.in);
  const auto &f = doc.formula;
  const bool strict = satisfies(f, ProfileName::ThreeSat4);
  const bool relaxed = satisfies(f, ProfileName::Mono23Sat4);
  if (!strict && !relaxed) {
    const auto report = check_profile(f, Profile::get(ProfileName::ThreeSat4));
    throw InputError("input is neither 3sat4 nor mono23sat4: " +
                     format_violation(report.violations.front()));
  }
  if (o.compact && o.target != "mono3sat5")
    err << "note: --compact-r3 only affects --target mono3sat5\n";

  const R3Mode mode = o.compact ? R3Mode::Compact : R3Mode::Standard;
  Reduction r;
  if (o.target == "mono23sat4")
    r = strict ? eliminate_mixed(f) : Reduction{f, ReductionTrace{{}, f.variable_count()}};
  else if (o.target == "mono3sat5")
    r = strict ? to_monotone_3sat5(f, mode) : replace_two_clauses_r3(f, mode);
  else
    r = strict ? to_monotone_3sat4(f) : replace_two_clauses_gadget(f);

  auto out_doc = dimacs::make_document(std::move(r.formula),
                                       o.trace ? r.trace.comment_lines()
                                               : std::vector<std::string>{});
  io.write(o.out, out_doc);
  return kOk;
}

int cmd_validate(const std::string &profile_name, const std::string &in, const Io &io,
                 std::ostream &out) {
  const auto profile = Profile::parse(profile_name);
  const auto doc = io.read(in);
  const auto report = check_profile(doc.formula, *profile);
  if (report.ok()) {
    out << "VALID " << profile->id() << '\n';
    return kOk;
  }
  out << "INVALID " << profile->id() << ' ' << report.size() << " violation(s)\n";
  for (const auto &v : report.violations)
    out << format_violation(v) << '\n';
  return kCheckFailed;
}

int cmd_solve(const std::string &method, unsigned limit, const std::string &in, const Io &io,
              std::ostream &out) {
  const auto doc = io.read(in);
  SatVerdict v;
  try {
    v = method == "exhaustive" ? solve_exhaustive(doc.formula, limit) : solve_dpll(doc.formula);
  } catch (const OracleError &e) {
    throw InputError(e.what());
  }
  out << sat_word(v.satisfiable) << '\n';
  if (v.witness)
    print_witness(out, *v.witness);
  out << "c method " << to_string(v.method) << " explored " << v.explored << '\n';
  return kOk;
}

int cmd_verify_gadget(const std::string &sign_text, std::ostream &out) {
  const auto sign = sign_text == "true" ? GadgetSign::ForceTrue : GadgetSign::ForceFalse;
  const auto &tmpl = GadgetTemplate::get(sign);
  FreshAllocator alloc(1);
  const auto g = instantiate_gadget(tmpl, alloc);
  const auto report = verify_forcing(g.clauses, g.designated);

  auto name_of = [&](Variable v) {
    const auto it = std::find(g.mapping.begin(), g.mapping.end(), v);
    return std::string(tmpl.names[static_cast<std::size_t>(it - g.mapping.begin())]);
  };
  auto list = [&](const char *label, const std::vector<Variable> &vars) {
    out << label;
    for (auto v : vars)
      out << ' ' << v.index() << '(' << name_of(v) << ')';
    out << '\n';
  };

  const bool forced = sign == GadgetSign::ForceTrue ? report.forces_true(g.designated)
                                                    : report.forces_false(g.designated);
  out << "gadget " << (sign == GadgetSign::ForceTrue ? "force-true" : "force-false") << '\n';
  out << "clauses " << g.clauses.size() << '\n';
  out << "satisfiable " << (report.satisfiable ? "yes" : "no") << '\n';
  out << "designated " << g.designated.index() << "(z)\n";
  list("forced_true", report.forced_true);
  list("forced_false", report.forced_false);
  out << "model_count " << report.model_count << '\n';
  out << "designated_forced " << (forced ? "yes" : "no") << '\n';
  return report.satisfiable && forced ? kOk : kCheckFailed;
}

int cmd_gen(const GenConfig &cfg, const std::string &path, const Io &io) {
  io.write(path, dimacs::make_document(generate(cfg)));
  return kOk;
}

int cmd_check_equisat(const std::string &orig, const std::string &reduced, unsigned limit,
                      const Io &io, std::ostream &out) {
  const auto a = io.read(orig);
  const auto b = io.read(reduced);
  EquisatResult r;
  try {
    r = compare_satisfiability(a.formula, b.formula, limit);
  } catch (const OracleError &e) {
    throw InputError(e.what());
  }
  out << "original " << sat_word(r.original.satisfiable) << " (" << to_string(r.original.method)
      << ")\n";
  out << "reduced " << sat_word(r.reduced.satisfiable) << " (" << to_string(r.reduced.method)
      << ")\n";
  out << (r.equisatisfiable() ? "EQUISAT" : "NOT-EQUISAT") << '\n';
  return r.equisatisfiable() ? kOk : kCheckFailed;
}

int cmd_blowup(std::uint64_t seeds, std::uint64_t seed_base, std::uint32_t vars,
               std::uint32_t clauses, std::ostream &out, std::ostream &err) {
  out << kBlowupCsvHeader << '\n';
  bool ok = true;
  for (std::uint64_t s = seed_base; s < seed_base + seeds; ++s) {
    const auto rec = blowup_report(generate({vars, clauses, s}));
    write_csv_rows(out, s, rec);
    for (const auto &p : rec.pipelines)
      if (!p.identity_holds()) {
        ok = false;
        err << "seed " << s << ' ' << p.pipeline << ": expected " << p.expected_vars
            << " vars / " << p.expected_clauses << " clauses\n";
      }
  }
  return ok ? kOk : kCheckFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Monotone 3-SAT reductions, validation and desk-scale solving", "mono3sat"};
  app.require_subcommand(1);
  const Io io(in, out);

  ReduceOpts ro;
  auto *reduce = app.add_subcommand("reduce", "Reduce a 3-SAT-4 DIMACS file");
  reduce->add_option("--target", ro.target, "Target profile")
      ->required()
      ->check(CLI::IsMember({"mono23sat4", "mono3sat5", "mono3sat4"}));
  reduce->add_flag("--compact-r3", ro.compact, "Use the 17-clause R3 variant");
  reduce->add_flag("--trace", ro.trace, "Embed 'c trace' provenance comments");
  reduce->add_option("input", ro.in)->required();
  reduce->add_option("output", ro.out)->required();

  std::string profile, validate_in;
  auto *validate = app.add_subcommand("validate", "Check profile membership");
  validate->add_option("--profile", profile)
      ->required()
      ->check(CLI::IsMember({"3sat4", "mono23sat4", "mono3sat5", "mono3sat4"}));
  validate->add_option("input", validate_in)->required();

  std::string method = "dpll", solve_in;
  unsigned limit = kDefaultExhaustiveLimit;
  auto *solve = app.add_subcommand("solve", "Decide satisfiability");
  solve->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "dpll"}));
  solve->add_option("--limit", limit, "Exhaustive variable limit")->check(CLI::Range(0, 63));
  solve->add_option("input", solve_in)->required();

  std::string sign = "true";
  auto *gadget = app.add_subcommand("verify-gadget", "Enumerate the forcing gadget");
  gadget->add_option("--sign", sign)->check(CLI::IsMember({"true", "false"}));

  GenConfig cfg;
  std::string gen_out;
  auto *gen = app.add_subcommand("gen", "Generate a random 3-SAT-4 instance");
  gen->add_option("--vars", cfg.variable_count)->required();
  gen->add_option("--clauses", cfg.clause_count)->required();
  gen->add_option("--seed", cfg.seed)->required();
  gen->add_option("output", gen_out)->required();

  std::string eq_orig, eq_red;
  unsigned eq_limit = kDefaultExhaustiveLimit;
  auto *equisat = app.add_subcommand("check-equisat", "Compare SAT verdicts of two formulas");
  equisat->add_option("original", eq_orig)->required();
  equisat->add_option("reduced", eq_red)->required();
  equisat->add_option("--limit", eq_limit)->check(CLI::Range(0, 63));

  std::uint64_t seeds = 0, seed_base = 0;
  std::uint32_t b_vars = 0, b_clauses = 0;
  auto *blowup = app.add_subcommand("blowup", "CSV of reduction sizes on random instances");
  blowup->add_option("--seeds", seeds)->required();
  blowup->add_option("--seed-base", seed_base);
  blowup->add_option("--vars", b_vars)->required();
  blowup->add_option("--clauses", b_clauses)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (reduce->parsed())
      return cmd_reduce(ro, io, err);
    if (validate->parsed())
      return cmd_validate(profile, validate_in, io, out);
    if (solve->parsed())
      return cmd_solve(method, limit, solve_in, io, out);
    if (gadget->parsed())
      return cmd_verify_gadget(sign, out);
    if (gen->parsed()) {
      try {
        cfg.validate();
      } catch (const GenError &e) {
        err << e.what() << '\n';
        return kUsage;
      }
      return cmd_gen(cfg, gen_out, io);
    }
    if (equisat->parsed())
      return cmd_check_equisat(eq_orig, eq_red, eq_limit, io, out);
    if (blowup->parsed()) {
      try {
        GenConfig{b_vars, b_clauses, 0}.validate();
      } catch (const GenError &e) {
        err << e.what() << '\n';
        return kUsage;
      }
      return cmd_blowup(seeds, seed_base, b_vars, b_clauses, out, err);
    }
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ReductionError &e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

} // namespace mono3sat::cli
