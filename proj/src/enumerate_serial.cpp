#include "mono3sat/enumerate.hpp"
#include "mono3sat/oracle.hpp"

#include <unordered_map>

namespace mono3sat::kernel {

MaskFormula compile(std::span<const Clause> clauses, std::span<const Variable> order) {
  if (order.size() > kMaxWidth)
    throw OracleError("enumeration supports at most " + std::to_string(kMaxWidth) +
                      " variables");
  std::unordered_map<std::uint32_t, unsigned> bit;
  for (unsigned i = 0; i < order.size(); ++i)
    bit.emplace(order[i].index(), i);

  MaskFormula m;
  m.width = static_cast<unsigned>(order.size());
  m.clauses.reserve(clauses.size());
  for (const auto &c : clauses) {
    MaskClause mc;
    for (const auto &l : c) {
      auto it = bit.find(l.variable().index());
      if (it == bit.end())
        throw OracleError("variable " + std::to_string(l.variable().index()) +
                          " missing from enumeration order");
      (l.positive() ? mc.pos : mc.neg) |= std::uint64_t{1} << it->second;
    }
    m.clauses.push_back(mc);
  }
  return m;
}

MaskFormula compile(const CnfFormula &f) {
  std::vector<Variable> order;
  order.reserve(f.variable_count());
  for (std::uint32_t i = 1; i <= f.variable_count(); ++i)
    order.emplace_back(i);
  return compile(f.clauses(), order);
}

namespace serial {

Census census(const MaskFormula &m) {
  Census c;
  const std::uint64_t end = m.space();
  for (std::uint64_t a = 0; a < end; ++a) {
    if (!satisfied(m, a))
      continue;
    if (c.models == 0)
      c.first = a;
    ++c.models;
    c.all_models_and &= a;
    c.all_models_or |= a;
  }
  return c;
}

std::optional<std::uint64_t> first_model(const MaskFormula &m) {
  const std::uint64_t end = m.space();
  for (std::uint64_t a = 0; a < end; ++a)
    if (satisfied(m, a))
      return a;
  return std::nullopt;
}

} // namespace serial
} // namespace mono3sat::kernel
