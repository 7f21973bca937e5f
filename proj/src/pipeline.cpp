#include "mono3sat/reducer.hpp"
#include "mono3sat/validator.hpp"

#include <algorithm>
#include <tuple>

namespace mono3sat {

std::vector<std::string> ReductionTrace::comment_lines() const {
  std::vector<std::tuple<std::size_t, std::string_view, std::size_t>> rows;
  for (const auto &s : steps)
    for (auto idx : s.produced)
      rows.emplace_back(idx, rule_name(s.rule), s.source_clause);
  std::sort(rows.begin(), rows.end());
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto &[idx, rule, src] : rows)
    out.push_back("trace " + std::to_string(idx) + " " + std::string(rule) + " " +
                  std::to_string(src));
  return out;
}

namespace {

constexpr std::size_t kOriginal = static_cast<std::size_t>(-1);

struct Tagged {
  Clause clause;
  std::size_t step; // kOriginal for untouched input clauses
  std::size_t root; // pipeline-input clause index
};

/// A pipeline run in progress: the current clause list with provenance tags.
class Run {
public:
  explicit Run(const CnfFormula &f)
      : alloc_(FreshAllocator::after(f)), ceiling_(f.variable_count()) {
    clauses_.reserve(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      clauses_.push_back({f[i], kOriginal, i});
  }

  /// Replaces every clause selected by `pick` with the clauses produced by
  /// `expand`, in place, recording one trace step per replacement.
  template <typename Pick, typename Expand> void rewrite(Pick pick, Expand expand) {
    std::vector<Tagged> next;
    next.reserve(clauses_.size());
    for (auto &t : clauses_) {
      if (!pick(t.clause)) {
        next.push_back(std::move(t));
        continue;
      }
      const std::uint32_t first_fresh = alloc_.next_index();
      auto [rule, children] = expand(t.clause, alloc_);
      TraceStep step{rule, t.root, {}, {}};
      for (std::uint32_t v = first_fresh; v < alloc_.next_index(); ++v)
        step.allocated.emplace_back(v);
      const std::size_t id = steps_.size();
      steps_.push_back(std::move(step));
      for (auto &c : children)
        next.push_back({std::move(c), id, t.root});
    }
    clauses_ = std::move(next);
  }

  Reduction finish() && {
    std::vector<Clause> out;
    out.reserve(clauses_.size());
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (clauses_[i].step != kOriginal)
        steps_[clauses_[i].step].produced.push_back(i);
      out.push_back(std::move(clauses_[i].clause));
    }
    return {CnfFormula(std::move(out), alloc_.ceiling()),
            ReductionTrace{std::move(steps_), ceiling_}};
  }

private:
  std::vector<Tagged> clauses_;
  std::vector<TraceStep> steps_;
  FreshAllocator alloc_;
  std::uint32_t ceiling_;
};

void require_profile(const CnfFormula &f, ProfileName name) {
  const auto profile = Profile::get(name);
  const auto report = check_profile(f, profile);
  if (!report.ok())
    throw ReductionError("input is not " + std::string(profile.id()) + ": " +
                         format_violation(report.violations.front()));
}

bool is_mixed(const Clause &c) { return classify_clause(c).polarity == Polarity::Mixed; }
bool is_pair(const Clause &c) { return c.size() == 2; }

void split_mixed(Run &run) {
  run.rewrite(is_mixed, [](const Clause &c, FreshAllocator &alloc) {
    auto [three, two] = gold_step(c, alloc);
    return std::pair{Rule::Gold, std::vector<Clause>{std::move(three), std::move(two)}};
  });
}

void replace_pairs_r3(Run &run, R3Mode mode) {
  const Rule rule = mode == R3Mode::Compact ? Rule::R3Compact : Rule::R3;
  run.rewrite(is_pair, [&](const Clause &c, FreshAllocator &alloc) {
    return std::pair{rule, apply_r3(c, alloc, mode)};
  });
}

void replace_pairs_gadget(Run &run) {
  run.rewrite(is_pair, [](const Clause &c, FreshAllocator &alloc) {
    // {¬x,¬y} needs z true to widen safely, {x,y} needs z false.
    const bool positive = classify_clause(c).polarity == Polarity::AllPositive;
    const auto sign = positive ? GadgetSign::ForceFalse : GadgetSign::ForceTrue;
    auto gadget = instantiate_gadget(GadgetTemplate::get(sign), alloc);
    std::vector<Literal> lits(c.begin(), c.end());
    lits.emplace_back(gadget.designated, positive);
    std::vector<Clause> out;
    out.reserve(1 + gadget.clauses.size());
    out.emplace_back(std::move(lits));
    for (auto &g : gadget.clauses)
      out.push_back(std::move(g));
    return std::pair{positive ? Rule::GadgetFalse : Rule::GadgetTrue, std::move(out)};
  });
}

} // namespace

Reduction eliminate_mixed(const CnfFormula &f) {
  require_profile(f, ProfileName::ThreeSat4);
  Run run(f);
  split_mixed(run);
  return std::move(run).finish();
}

Reduction to_monotone_3sat5(const CnfFormula &f, R3Mode mode) {
  require_profile(f, ProfileName::ThreeSat4);
  Run run(f);
  split_mixed(run);
  replace_pairs_r3(run, mode);
  return std::move(run).finish();
}

Reduction to_monotone_3sat4(const CnfFormula &f) {
  require_profile(f, ProfileName::ThreeSat4);
  Run run(f);
  split_mixed(run);
  replace_pairs_gadget(run);
  return std::move(run).finish();
}

Reduction replace_two_clauses_r3(const CnfFormula &mono23, R3Mode mode) {
  require_profile(mono23, ProfileName::Mono23Sat4);
  Run run(mono23);
  replace_pairs_r3(run, mode);
  return std::move(run).finish();
}

Reduction replace_two_clauses_gadget(const CnfFormula &mono23) {
  require_profile(mono23, ProfileName::Mono23Sat4);
  Run run(mono23);
  replace_pairs_gadget(run);
  return std::move(run).finish();
}

} // namespace mono3sat
