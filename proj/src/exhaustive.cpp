#include "mono3sat/enumerate.hpp"
#include "mono3sat/oracle.hpp"

#include <algorithm>

namespace mono3sat {

namespace {

void check_limit(std::size_t vars, unsigned limit) {
  const unsigned cap = std::min(limit, kernel::kMaxWidth);
  if (vars > cap)
    throw OracleError(std::to_string(vars) + " variables exceed the exhaustive limit of " +
                      std::to_string(cap));
}

} // namespace

SatVerdict solve_exhaustive(const CnfFormula &f, unsigned var_limit, int threads) {
  check_limit(f.variable_count(), var_limit);
  const auto m = kernel::compile(f);
  const auto first = kernel::parallel::first_model(m, threads);

  SatVerdict v;
  v.method = Method::Exhaustive;
  v.satisfiable = first.has_value();
  v.explored = first ? *first + 1 : m.space();
  if (first) {
    v.witness = Assignment::from_bits(*first, f.variable_count());
    if (!evaluate(f, *v.witness))
      throw OracleError("exhaustive witness fails evaluation");
  }
  return v;
}

ForcingReport verify_forcing(std::span<const Clause> clauses, Variable designated,
                             unsigned var_limit, int threads) {
  std::vector<Variable> order{designated};
  for (const auto &c : clauses)
    for (const auto &l : c)
      order.push_back(l.variable());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  check_limit(order.size(), var_limit);

  const auto m = kernel::compile(clauses, order);
  const auto census = kernel::parallel::census(m, threads);

  ForcingReport r;
  r.designated = designated;
  r.model_count = census.models;
  r.satisfiable = census.models > 0;
  if (r.satisfiable)
    for (unsigned i = 0; i < order.size(); ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (census.all_models_and & bit)
        r.forced_true.push_back(order[i]);
      if (!(census.all_models_or & bit))
        r.forced_false.push_back(order[i]);
    }
  return r;
}

EquisatResult compare_satisfiability(const CnfFormula &original, const CnfFormula &reduced,
                                     unsigned var_limit) {
  const bool original_fits = original.variable_count() <= var_limit;
  const bool reduced_fits = reduced.variable_count() <= var_limit;
  if (!original_fits && !reduced_fits)
    throw OracleError("neither formula fits the exhaustive limit of " +
                      std::to_string(var_limit) + " variables");
  EquisatResult r;
  r.original = original_fits ? solve_exhaustive(original, var_limit) : solve_dpll(original);
  r.reduced = solve_dpll(reduced);
  return r;
}

} // namespace mono3sat
