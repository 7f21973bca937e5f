#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mono3sat {

/// Thrown when a value would violate a formula-core invariant.
class FormulaError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A propositional variable, identified by a 1-based index.
class Variable {
public:
  explicit Variable(std::uint32_t index);

  std::uint32_t index() const noexcept { return index_; }

  auto operator<=>(const Variable &) const = default;

private:
  std::uint32_t index_;
};

class Literal {
public:
  Literal(Variable var, bool positive) noexcept : var_(var), positive_(positive) {}

  /// DIMACS-style signed integer: 3 is x3, -3 is the negation of x3.
  static Literal from_int(int value);

  Variable variable() const noexcept { return var_; }
  bool positive() const noexcept { return positive_; }
  Literal negated() const noexcept { return {var_, !positive_}; }
  int to_int() const noexcept;

  bool operator==(const Literal &) const = default;

private:
  Variable var_;
  bool positive_;
};

enum class Polarity { AllPositive, AllNegative, Mixed };

const char *to_string(Polarity p) noexcept;

struct ClauseKind {
  std::size_t width;
  Polarity polarity;

  bool operator==(const ClauseKind &) const = default;
};

/// A non-empty set of literals over pairwise-distinct variables.
///
/// Literals are kept in ascending variable order so that two clauses with the
/// same literal set compare and serialize identically. Repeating a variable
/// (with either polarity) is rejected at construction.
class Clause {
public:
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals);

  /// Builds a clause from DIMACS-style signed integers.
  static Clause of(std::initializer_list<int> literals);
  static Clause of(std::span<const int> literals);

  std::span<const Literal> literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }

  auto begin() const noexcept { return literals_.begin(); }
  auto end() const noexcept { return literals_.end(); }

  Clause negated() const;
  bool contains(Variable v) const noexcept;

  bool operator==(const Clause &) const = default;

private:
  std::vector<Literal> literals_;
};

ClauseKind classify_clause(const Clause &c) noexcept;

inline bool is_monotone(const Clause &c) noexcept {
  return classify_clause(c).polarity != Polarity::Mixed;
}

/// Var(C): the underlying variables with negations stripped.
std::set<Variable> var_set(const Clause &c);

struct PolaritySplit {
  std::optional<Clause> positive_part;
  std::optional<Clause> negative_part;

  /// Recombines both parts into the source clause.
  Clause merge() const;
};

PolaritySplit polarity_split(const Clause &c);

/// An ordered clause list. variable_count may exceed the largest referenced
/// index (DIMACS headers can declare unused variables) but never falls below it.
class CnfFormula {
public:
  CnfFormula() = default;
  explicit CnfFormula(std::vector<Clause> clauses);
  CnfFormula(std::vector<Clause> clauses, std::uint32_t variable_count);

  const std::vector<Clause> &clauses() const noexcept { return clauses_; }
  std::uint32_t variable_count() const noexcept { return variable_count_; }
  std::size_t size() const noexcept { return clauses_.size(); }
  bool empty() const noexcept { return clauses_.empty(); }
  const Clause &operator[](std::size_t i) const { return clauses_.at(i); }

  /// Largest variable index occurring in any clause (0 for an empty formula).
  std::uint32_t max_referenced() const noexcept;
  /// Variables occurring in at least one clause, ascending.
  std::vector<Variable> referenced_variables() const;

  bool operator==(const CnfFormula &) const = default;

private:
  std::vector<Clause> clauses_;
  std::uint32_t variable_count_ = 0;
};

struct OccurrenceCounts {
  std::size_t positive = 0;
  std::size_t negative = 0;

  std::size_t total() const noexcept { return positive + negative; }
  bool operator==(const OccurrenceCounts &) const = default;
};

/// Per-variable occurrence counters for variables 1..variable_count.
class OccurrenceTable {
public:
  OccurrenceTable() = default;
  explicit OccurrenceTable(const CnfFormula &f);

  /// Counts for v; zeros for indices outside the table.
  OccurrenceCounts operator[](Variable v) const noexcept;
  std::size_t total(Variable v) const noexcept { return (*this)[v].total(); }

  std::uint32_t variable_count() const noexcept {
    return static_cast<std::uint32_t>(counts_.size());
  }
  std::size_t sum_of_totals() const noexcept;
  /// Largest total over all variables (0 for an empty table).
  std::size_t max_total() const noexcept;
  bool empty() const noexcept { return counts_.empty(); }

private:
  std::vector<OccurrenceCounts> counts_; // counts_[i] is variable i + 1
};

inline OccurrenceTable occurrence_table(const CnfFormula &f) { return OccurrenceTable(f); }

} // namespace mono3sat
