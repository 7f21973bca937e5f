#pragma once

#include "mono3sat/formula.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

namespace mono3sat {

class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultExhaustiveLimit = 24;

/// A truth assignment over an explicit set of variables.
class Assignment {
public:
  Assignment() = default;

  /// Variables 1..n all false.
  static Assignment all_false(std::uint32_t n);
  /// Variables 1..n; variable i takes bit i - 1 of bits.
  static Assignment from_bits(std::uint64_t bits, std::uint32_t n);

  void set(Variable v, bool value) { values_[v] = value; }
  bool value(Variable v) const;
  bool contains(Variable v) const { return values_.contains(v); }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::vector<Variable> domain() const;
  std::vector<Variable> true_variables() const;

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  bool operator==(const Assignment &) const = default;

private:
  std::map<Variable, bool> values_;
};

/// True iff every clause has a satisfied literal; throws if a clause variable
/// is missing from a.
bool evaluate(const CnfFormula &f, const Assignment &a);
bool evaluate(std::span<const Clause> clauses, const Assignment &a);

Assignment restrict_model(const Assignment &a, const std::set<Variable> &vars);

enum class Method { Exhaustive, Dpll };

const char *to_string(Method m) noexcept;

struct SatVerdict {
  bool satisfiable = false;
  std::optional<Assignment> witness;
  Method method = Method::Exhaustive;
  /// Assignments visited (exhaustive) or branching decisions made (DPLL).
  std::uint64_t explored = 0;
};

/// Enumerates all assignments of variables 1..variable_count in ascending
/// counter order; the witness is the first model.
SatVerdict solve_exhaustive(const CnfFormula &f, unsigned var_limit = kDefaultExhaustiveLimit,
                            int threads = 0);

/// Backtracking search with unit propagation and pure-literal elimination.
SatVerdict solve_dpll(const CnfFormula &f);

struct ForcingReport {
  bool satisfiable = false;
  Variable designated{1};
  std::vector<Variable> forced_true;
  std::vector<Variable> forced_false;
  std::uint64_t model_count = 0;

  bool forces_true(Variable v) const;
  bool forces_false(Variable v) const;
};

/// Exhaustive census over the variables of `clauses` plus `designated`.
ForcingReport verify_forcing(std::span<const Clause> clauses, Variable designated,
                             unsigned var_limit = kDefaultExhaustiveLimit, int threads = 0);

struct EquisatResult {
  SatVerdict original;
  SatVerdict reduced;

  bool equisatisfiable() const noexcept { return original.satisfiable == reduced.satisfiable; }
};

/// The original is decided exhaustively when it fits var_limit, otherwise by
/// DPLL; the reduced formula always by DPLL. Throws if neither side fits.
EquisatResult compare_satisfiability(const CnfFormula &original, const CnfFormula &reduced,
                                     unsigned var_limit = kDefaultExhaustiveLimit);

inline bool check_equisat(const CnfFormula &original, const CnfFormula &reduced,
                          unsigned var_limit = kDefaultExhaustiveLimit) {
  return compare_satisfiability(original, reduced, var_limit).equisatisfiable();
}

} // namespace mono3sat
