#include "mono3sat/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace mono3sat {

Variable::Variable(std::uint32_t index) : index_(index) {
  if (index == 0)
    throw FormulaError("variable index must be >= 1");
}

Literal Literal::from_int(int value) {
  if (value == 0)
    throw FormulaError("literal 0 is not a variable");
  if (value == std::numeric_limits<int>::min())
    throw FormulaError("literal out of range");
  return {Variable(static_cast<std::uint32_t>(std::abs(value))), value > 0};
}

int Literal::to_int() const noexcept {
  const int v = static_cast<int>(var_.index());
  return positive_ ? v : -v;
}

const char *to_string(Polarity p) noexcept {
  switch (p) {
  case Polarity::AllPositive:
    return "all-positive";
  case Polarity::AllNegative:
    return "all-negative";
  case Polarity::Mixed:
    return "mixed";
  }
  return "?";
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty())
    throw FormulaError("clause must contain at least one literal");
  std::sort(literals_.begin(), literals_.end(), [](const Literal &a, const Literal &b) {
    return a.variable() < b.variable();
  });
  for (std::size_t i = 1; i < literals_.size(); ++i) {
    const auto &prev = literals_[i - 1];
    const auto &cur = literals_[i];
    if (prev.variable() != cur.variable())
      continue;
    if (prev.positive() != cur.positive())
      throw FormulaError("tautological clause: variable " +
                         std::to_string(cur.variable().index()) +
                         " occurs with both polarities");
    throw FormulaError("duplicate variable " + std::to_string(cur.variable().index()) +
                       " in clause");
  }
}

Clause::Clause(std::initializer_list<Literal> literals)
    : Clause(std::vector<Literal>(literals)) {}

Clause Clause::of(std::span<const int> literals) {
  std::vector<Literal> lits;
  lits.reserve(literals.size());
  for (int l : literals)
    lits.push_back(Literal::from_int(l));
  return Clause(std::move(lits));
}

Clause Clause::of(std::initializer_list<int> literals) {
  return of(std::span<const int>(literals.begin(), literals.size()));
}

Clause Clause::negated() const {
  std::vector<Literal> lits;
  lits.reserve(literals_.size());
  for (const auto &l : literals_)
    lits.push_back(l.negated());
  return Clause(std::move(lits));
}

bool Clause::contains(Variable v) const noexcept {
  return std::any_of(literals_.begin(), literals_.end(),
                     [v](const Literal &l) { return l.variable() == v; });
}

ClauseKind classify_clause(const Clause &c) noexcept {
  bool any_pos = false;
  bool any_neg = false;
  for (const auto &l : c) {
    any_pos |= l.positive();
    any_neg |= !l.positive();
  }
  Polarity p = any_pos && any_neg ? Polarity::Mixed
               : any_pos          ? Polarity::AllPositive
                                  : Polarity::AllNegative;
  return {c.size(), p};
}

std::set<Variable> var_set(const Clause &c) {
  std::set<Variable> vars;
  for (const auto &l : c)
    vars.insert(l.variable());
  return vars;
}

PolaritySplit polarity_split(const Clause &c) {
  std::vector<Literal> pos;
  std::vector<Literal> neg;
  for (const auto &l : c)
    (l.positive() ? pos : neg).push_back(l);
  PolaritySplit split;
  if (!pos.empty())
    split.positive_part.emplace(std::move(pos));
  if (!neg.empty())
    split.negative_part.emplace(std::move(neg));
  return split;
}

Clause PolaritySplit::merge() const {
  std::vector<Literal> lits;
  if (positive_part)
    lits.insert(lits.end(), positive_part->begin(), positive_part->end());
  if (negative_part)
    lits.insert(lits.end(), negative_part->begin(), negative_part->end());
  return Clause(std::move(lits));
}

namespace {

std::uint32_t max_index(const std::vector<Clause> &clauses) noexcept {
  std::uint32_t m = 0;
  for (const auto &c : clauses)
    for (const auto &l : c)
      m = std::max(m, l.variable().index());
  return m;
}

} // namespace

CnfFormula::CnfFormula(std::vector<Clause> clauses)
    : clauses_(std::move(clauses)), variable_count_(max_index(clauses_)) {}

CnfFormula::CnfFormula(std::vector<Clause> clauses, std::uint32_t variable_count)
    : clauses_(std::move(clauses)), variable_count_(variable_count) {
  const auto m = max_index(clauses_);
  if (m > variable_count_)
    throw FormulaError("variable " + std::to_string(m) + " exceeds variable count " +
                       std::to_string(variable_count_));
}

std::uint32_t CnfFormula::max_referenced() const noexcept { return max_index(clauses_); }

std::vector<Variable> CnfFormula::referenced_variables() const {
  std::vector<bool> seen(static_cast<std::size_t>(variable_count_) + 1, false);
  for (const auto &c : clauses_)
    for (const auto &l : c)
      seen[l.variable().index()] = true;
  std::vector<Variable> out;
  for (std::uint32_t i = 1; i <= variable_count_; ++i)
    if (seen[i])
      out.emplace_back(i);
  return out;
}

OccurrenceTable::OccurrenceTable(const CnfFormula &f) : counts_(f.variable_count()) {
  for (const auto &c : f.clauses())
    for (const auto &l : c) {
      auto &slot = counts_[l.variable().index() - 1];
      (l.positive() ? slot.positive : slot.negative)++;
    }
}

OccurrenceCounts OccurrenceTable::operator[](Variable v) const noexcept {
  const std::size_t i = v.index() - 1;
  return i < counts_.size() ? counts_[i] : OccurrenceCounts{};
}

std::size_t OccurrenceTable::sum_of_totals() const noexcept {
  std::size_t s = 0;
  for (const auto &c : counts_)
    s += c.total();
  return s;
}

std::size_t OccurrenceTable::max_total() const noexcept {
  std::size_t m = 0;
  for (const auto &c : counts_)
    m = std::max(m, c.total());
  return m;
}

} // namespace mono3sat
