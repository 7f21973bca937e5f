#include "mono3sat/oracle.hpp"

#include <algorithm>

namespace mono3sat {

Assignment Assignment::all_false(std::uint32_t n) { return from_bits(0, n); }

Assignment Assignment::from_bits(std::uint64_t bits, std::uint32_t n) {
  if (n > 64)
    throw OracleError("from_bits supports at most 64 variables");
  Assignment a;
  for (std::uint32_t i = 1; i <= n; ++i)
    a.set(Variable(i), ((bits >> (i - 1)) & 1U) != 0);
  return a;
}

bool Assignment::value(Variable v) const {
  auto it = values_.find(v);
  if (it == values_.end())
    throw OracleError("assignment does not cover variable " + std::to_string(v.index()));
  return it->second;
}

std::vector<Variable> Assignment::domain() const {
  std::vector<Variable> out;
  out.reserve(values_.size());
  for (const auto &[v, _] : values_)
    out.push_back(v);
  return out;
}

std::vector<Variable> Assignment::true_variables() const {
  std::vector<Variable> out;
  for (const auto &[v, b] : values_)
    if (b)
      out.push_back(v);
  return out;
}

bool evaluate(std::span<const Clause> clauses, const Assignment &a) {
  bool all = true;
  // Scan everything so a partial assignment is reported even after a false clause.
  for (const auto &c : clauses) {
    bool sat = false;
    for (const auto &l : c)
      sat |= a.value(l.variable()) == l.positive();
    all &= sat;
  }
  return all;
}

bool evaluate(const CnfFormula &f, const Assignment &a) { return evaluate(f.clauses(), a); }

Assignment restrict_model(const Assignment &a, const std::set<Variable> &vars) {
  Assignment out;
  for (auto v : vars) {
    if (!a.contains(v))
      throw OracleError("cannot restrict to variable " + std::to_string(v.index()) +
                        " outside the assignment domain");
    out.set(v, a.value(v));
  }
  return out;
}

const char *to_string(Method m) noexcept {
  return m == Method::Exhaustive ? "exhaustive" : "dpll";
}

bool ForcingReport::forces_true(Variable v) const {
  return std::find(forced_true.begin(), forced_true.end(), v) != forced_true.end();
}

bool ForcingReport::forces_false(Variable v) const {
  return std::find(forced_false.begin(), forced_false.end(), v) != forced_false.end();
}

} // namespace mono3sat
