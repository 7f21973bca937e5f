#include "mono3sat/bench_gen.hpp"
#include "mono3sat/reducer.hpp"

#include <chrono>
#include <iomanip>

namespace mono3sat {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0)
    throw GenError("empty sampling range");
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold)
      return r % bound;
  }
}

void GenConfig::validate() const {
  if (variable_count < 3)
    throw GenError("need at least 3 variables, got " + std::to_string(variable_count));
  if (3ULL * clause_count > 4ULL * variable_count)
    throw GenError(std::to_string(clause_count) + " clauses need " +
                   std::to_string(3ULL * clause_count) + " occurrences but " +
                   std::to_string(variable_count) + " variables allow only " +
                   std::to_string(4ULL * variable_count));
}

namespace {

constexpr int kOccurrenceBudget = 4;
constexpr int kMaxRestarts = 10000;

} // namespace

CnfFormula generate(const GenConfig &cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  const std::uint32_t n = cfg.variable_count;

  for (int attempt = 0; attempt < kMaxRestarts; ++attempt) {
    std::vector<int> budget(n + 1, kOccurrenceBudget);
    std::vector<Clause> clauses;
    clauses.reserve(cfg.clause_count);
    bool stuck = false;

    for (std::uint32_t k = 0; k < cfg.clause_count; ++k) {
      std::vector<std::uint32_t> open;
      for (std::uint32_t v = 1; v <= n; ++v)
        if (budget[v] > 0)
          open.push_back(v);
      if (open.size() < 3) {
        // Remaining budget sits on fewer than 3 variables; start over.
        stuck = true;
        break;
      }
      std::vector<Literal> lits;
      for (std::size_t j = 0; j < 3; ++j) {
        const auto pick = j + rng.below(open.size() - j);
        std::swap(open[j], open[pick]);
        const std::uint32_t v = open[j];
        --budget[v];
        lits.emplace_back(Variable(v), rng.coin());
      }
      clauses.emplace_back(std::move(lits));
    }
    if (!stuck)
      return CnfFormula(std::move(clauses), n);
  }
  throw GenError("could not place clauses within the occurrence budget");
}

bool BlowupRecord::identities_hold() const noexcept {
  for (const auto &p : pipelines)
    if (!p.identity_holds())
      return false;
  return true;
}

namespace {

template <typename Fn> PipelineBlowup measure(std::string name, Fn &&fn) {
  const auto t0 = std::chrono::steady_clock::now();
  const Reduction r = fn();
  const auto t1 = std::chrono::steady_clock::now();
  PipelineBlowup p;
  p.pipeline = std::move(name);
  p.out_vars = r.formula.variable_count();
  p.out_clauses = r.formula.size();
  p.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return p;
}

} // namespace

BlowupRecord blowup_report(const CnfFormula &f) {
  BlowupRecord rec;
  rec.input_vars = f.variable_count();
  rec.input_clauses = f.size();
  for (const auto &c : f.clauses())
    rec.mixed += classify_clause(c).polarity == Polarity::Mixed;

  const auto stage_a = eliminate_mixed(f);
  for (const auto &c : stage_a.formula.clauses())
    if (c.size() == 2)
      (classify_clause(c).polarity == Polarity::AllPositive ? rec.pos2 : rec.neg2)++;
  const std::size_t two = rec.pos2 + rec.neg2;
  const auto base_vars = static_cast<std::uint32_t>(rec.input_vars + rec.mixed);
  const std::size_t base_clauses = rec.input_clauses + rec.mixed;

  auto p = measure("mono23sat4", [&] { return eliminate_mixed(f); });
  p.expected_vars = base_vars;
  p.expected_clauses = base_clauses;
  rec.pipelines.push_back(p);

  // Each 2-clause: R3 swaps it for 19 clauses over 18 fresh variables
  // (compact: 17 and 16); the gadget route widens it and adds 25 clauses
  // over 21 fresh variables.
  p = measure("mono3sat5", [&] { return to_monotone_3sat5(f); });
  p.expected_vars = base_vars + static_cast<std::uint32_t>(18 * two);
  p.expected_clauses = base_clauses + 18 * two;
  rec.pipelines.push_back(p);

  p = measure("mono3sat5-compact", [&] { return to_monotone_3sat5(f, R3Mode::Compact); });
  p.expected_vars = base_vars + static_cast<std::uint32_t>(16 * two);
  p.expected_clauses = base_clauses + 16 * two;
  rec.pipelines.push_back(p);

  p = measure("mono3sat4", [&] { return to_monotone_3sat4(f); });
  p.expected_vars = base_vars + static_cast<std::uint32_t>(21 * two);
  p.expected_clauses = base_clauses + 25 * two;
  rec.pipelines.push_back(p);

  return rec;
}

void write_csv_rows(std::ostream &out, std::uint64_t seed, const BlowupRecord &r) {
  for (const auto &p : r.pipelines)
    out << seed << ',' << r.input_vars << ',' << r.input_clauses << ',' << r.mixed << ','
        << r.pos2 << ',' << r.neg2 << ',' << p.pipeline << ',' << p.out_vars << ','
        << p.out_clauses << ',' << std::fixed << std::setprecision(3) << p.millis << '\n';
}

} // namespace mono3sat
