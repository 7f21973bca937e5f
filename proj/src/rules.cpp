#include "mono3sat/reducer.hpp"

#include <limits>

namespace mono3sat {

FreshAllocator::FreshAllocator(std::uint32_t next_index) : next_(next_index) {
  if (next_index == 0)
    throw ReductionError("fresh variables start at index 1 or above");
}

Variable FreshAllocator::allocate() {
  if (next_ == std::numeric_limits<std::uint32_t>::max())
    throw ReductionError("fresh variable space exhausted");
  return Variable(next_++);
}

std::string_view rule_name(Rule r) noexcept {
  switch (r) {
  case Rule::Gold:
    return "gold";
  case Rule::R1:
    return "r1";
  case Rule::R2:
    return "r2";
  case Rule::R3:
    return "r3";
  case Rule::R3Compact:
    return "r3-compact";
  case Rule::GadgetTrue:
    return "gadget-true";
  case Rule::GadgetFalse:
    return "gadget-false";
  }
  return "?";
}

RuleStats rule_stats(Rule r) {
  switch (r) {
  case Rule::R1:
    return {2, 2, 2, 4, 3};
  case Rule::R2:
    return {1, 1, 4, 6, 5};
  case Rule::R3:
    return {0, 0, 5, 19, 18};
  case Rule::R3Compact:
    return {0, 0, 5, 17, 16};
  default:
    throw ReductionError("no 2-clause statistics for rule " + std::string(rule_name(r)));
  }
}

namespace {

/// Returns the shared sign of a monotone 2-clause, throwing otherwise.
bool monotone_pair_sign(const Clause &c, std::string_view rule) {
  const auto kind = classify_clause(c);
  if (kind.width != 2 || kind.polarity == Polarity::Mixed)
    throw ReductionError(std::string(rule) + " expects a monotone 2-clause");
  return kind.polarity == Polarity::AllPositive;
}

void append(std::vector<Clause> &out, std::vector<Clause> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

Clause widen(const Clause &c, Literal extra) {
  std::vector<Literal> lits(c.begin(), c.end());
  lits.push_back(extra);
  return Clause(std::move(lits));
}

} // namespace

std::pair<Clause, Clause> gold_step(const Clause &c, FreshAllocator &alloc) {
  const auto kind = classify_clause(c);
  if (kind.polarity != Polarity::Mixed)
    throw ReductionError("gold_step expects a mixed clause");
  if (kind.width != 3)
    throw ReductionError("gold_step expects a 3-clause");

  const auto split = polarity_split(c);
  const Variable u = alloc.allocate();
  Clause pos = widen(*split.positive_part, Literal(u, true));
  Clause neg = widen(*split.negative_part, Literal(u, false));
  if (pos.size() == 3)
    return {std::move(pos), std::move(neg)};
  return {std::move(neg), std::move(pos)};
}

std::vector<Clause> apply_r1(const Clause &c, FreshAllocator &alloc) {
  const bool s = monotone_pair_sign(c, "R1");
  const Variable u = alloc.allocate();
  const Variable v = alloc.allocate();
  const Variable w = alloc.allocate();
  return {widen(c, Literal(u, s)), widen(c, Literal(v, s)), widen(c, Literal(w, s)),
          Clause{Literal(u, !s), Literal(v, !s), Literal(w, !s)}};
}

std::vector<Clause> apply_r2(const Clause &c, FreshAllocator &alloc) {
  const bool s = monotone_pair_sign(c, "R2");
  const Variable u = alloc.allocate();
  const Variable v = alloc.allocate();
  std::vector<Clause> out{widen(c, Literal(u, s)), widen(c, Literal(v, s))};
  append(out, apply_r1(Clause{Literal(u, !s), Literal(v, !s)}, alloc));
  return out;
}

std::vector<Clause> apply_r3(const Clause &c, FreshAllocator &alloc, R3Mode mode) {
  const bool s = monotone_pair_sign(c, "R3");
  const Variable u = alloc.allocate();
  const Variable v = alloc.allocate();
  const Variable w = alloc.allocate();
  std::vector<Clause> out{widen(c, Literal(u, s))};
  append(out, apply_r2(Clause{Literal(u, !s), Literal(v, !s)}, alloc));
  append(out, apply_r2(Clause{Literal(u, !s), Literal(w, !s)}, alloc));
  const Clause last{Literal(v, s), Literal(w, s)};
  append(out, mode == R3Mode::Compact ? apply_r1(last, alloc) : apply_r2(last, alloc));
  return out;
}

} // namespace mono3sat
