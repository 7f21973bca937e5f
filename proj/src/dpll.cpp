#include "mono3sat/oracle.hpp"

#include <cstdint>
#include <vector>

namespace mono3sat {

namespace {

// Literal codes: 2 * var for the positive literal, 2 * var + 1 for the negative.
using Lit = std::uint32_t;

inline Lit encode(const Literal &l) { return 2 * l.variable().index() + (l.positive() ? 0 : 1); }
constexpr Lit negate(Lit l) { return l ^ 1U; }
constexpr std::uint32_t var_of(Lit l) { return l >> 1; }

enum : std::int8_t { kUnassigned = -1, kFalse = 0, kTrue = 1 };

/// Counter-based DPLL: every clause tracks how many of its literals are true
/// and false, and every literal how many unsatisfied clauses contain it.
class Dpll {
public:
  explicit Dpll(const CnfFormula &f)
      : n_(f.variable_count()), occ_(2 * (n_ + 1)), active_(2 * (n_ + 1), 0),
        value_(n_ + 1, kUnassigned) {
    clauses_.reserve(f.size());
    for (const auto &c : f.clauses()) {
      std::vector<Lit> lits;
      for (const auto &l : c) {
        const Lit code = encode(l);
        lits.push_back(code);
        occ_[code].push_back(static_cast<std::uint32_t>(clauses_.size()));
        ++active_[code];
      }
      clauses_.push_back(std::move(lits));
    }
    true_count_.assign(clauses_.size(), 0);
    false_count_.assign(clauses_.size(), 0);
    unsatisfied_ = clauses_.size();
  }

  SatVerdict run() {
    SatVerdict verdict;
    verdict.method = Method::Dpll;

    bool conflict = false;
    for (const auto &c : clauses_)
      if (c.size() == 1 && !enqueue(c.front()))
        conflict = true;
    if (!conflict)
      conflict = !simplify();

    for (;;) {
      if (conflict) {
        if (!backtrack())
          return verdict;
        ++nodes_;
        conflict = !simplify();
        continue;
      }
      if (unsatisfied_ == 0)
        break;
      const std::uint32_t v = pick_branch();
      decisions_.push_back({trail_.size(), v, false});
      ++nodes_;
      enqueue(2 * v);
      conflict = !simplify();
    }

    verdict.satisfiable = true;
    verdict.explored = nodes_;
    Assignment a;
    for (std::uint32_t v = 1; v <= n_; ++v)
      a.set(Variable(v), value_[v] == kTrue);
    verdict.witness = std::move(a);
    return verdict;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  struct Decision {
    std::size_t trail_pos;
    std::uint32_t var;
    bool flipped;
  };

  std::int8_t lit_value(Lit l) const {
    const auto v = value_[var_of(l)];
    if (v == kUnassigned)
      return kUnassigned;
    return (l & 1U) ? static_cast<std::int8_t>(1 - v) : v;
  }

  /// Makes l true; false if l is already false.
  bool enqueue(Lit l) {
    const auto cur = lit_value(l);
    if (cur != kUnassigned)
      return cur == kTrue;
    value_[var_of(l)] = (l & 1U) ? kFalse : kTrue;
    trail_.push_back(l);
    return true;
  }

  /// Updates counters for one assigned literal; returns false on conflict.
  /// Both occurrence lists are always processed in full so undo stays exact.
  bool process(Lit l) {
    for (auto ci : occ_[l])
      if (true_count_[ci]++ == 0) {
        --unsatisfied_;
        for (Lit x : clauses_[ci])
          --active_[x];
      }
    bool ok = true;
    for (auto ci : occ_[negate(l)]) {
      const auto falses = ++false_count_[ci];
      if (true_count_[ci] != 0)
        continue;
      const auto size = clauses_[ci].size();
      if (falses == size) {
        ok = false;
      } else if (falses + 1 == size && ok) {
        for (Lit x : clauses_[ci])
          if (lit_value(x) == kUnassigned) {
            enqueue(x);
            break;
          }
      }
    }
    return ok;
  }

  bool propagate() {
    while (head_ < trail_.size())
      if (!process(trail_[head_++]))
        return false;
    return true;
  }

  /// Unit propagation to fixpoint, then pure literals, repeated.
  bool simplify() {
    for (;;) {
      if (!propagate())
        return false;
      bool assigned = false;
      for (std::uint32_t v = 1; v <= n_; ++v) {
        if (value_[v] != kUnassigned)
          continue;
        const auto pos = active_[2 * v];
        const auto neg = active_[2 * v + 1];
        if (pos > 0 && neg == 0)
          assigned |= enqueue(2 * v);
        else if (neg > 0 && pos == 0)
          assigned |= enqueue(2 * v + 1);
      }
      if (!assigned)
        return true;
    }
  }

  void undo_to(std::size_t pos) {
    while (trail_.size() > pos) {
      const Lit l = trail_.back();
      if (trail_.size() <= head_) {
        for (auto ci : occ_[l])
          if (--true_count_[ci] == 0) {
            ++unsatisfied_;
            for (Lit x : clauses_[ci])
              ++active_[x];
          }
        for (auto ci : occ_[negate(l)])
          --false_count_[ci];
      }
      value_[var_of(l)] = kUnassigned;
      trail_.pop_back();
      if (head_ > trail_.size())
        head_ = trail_.size();
    }
  }

  /// Flips the most recent unflipped decision; false when none is left.
  bool backtrack() {
    while (!decisions_.empty()) {
      auto &d = decisions_.back();
      undo_to(d.trail_pos);
      if (!d.flipped) {
        d.flipped = true;
        enqueue(2 * d.var + 1);
        return true;
      }
      decisions_.pop_back();
    }
    return false;
  }

  /// Lowest-index unassigned variable still occurring in an unsatisfied clause.
  std::uint32_t pick_branch() const {
    for (std::uint32_t v = 1; v <= n_; ++v)
      if (value_[v] == kUnassigned && (active_[2 * v] > 0 || active_[2 * v + 1] > 0))
        return v;
    throw OracleError("dpll: no branching variable with unsatisfied clauses left");
  }

  std::uint32_t n_;
  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::uint32_t>> occ_;
  std::vector<std::uint32_t> active_;
  std::vector<std::int8_t> value_;
  std::vector<std::uint32_t> true_count_;
  std::vector<std::uint32_t> false_count_;
  std::size_t unsatisfied_ = 0;
  std::vector<Lit> trail_;
  std::size_t head_ = 0;
  std::vector<Decision> decisions_;
  std::uint64_t nodes_ = 0;
};

} // namespace

SatVerdict solve_dpll(const CnfFormula &f) {
  Dpll solver(f);
  auto verdict = solver.run();
  verdict.explored = solver.nodes();
  if (verdict.satisfiable && !evaluate(f, *verdict.witness))
    throw OracleError("dpll witness fails evaluation");
  return verdict;
}

} // namespace mono3sat
