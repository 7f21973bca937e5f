#pragma once

// Bitmask kernels for exhaustive assignment enumeration.
//
// An assignment over n variables is an n-bit counter; bit i holds the value of
// the i-th variable of the compiled order. Counters are visited in ascending
// order, so the first model found is also the lexicographically smallest one.
// The serial kernels are the reference; the parallel kernels partition the
// counter range by its high-order bits and must reproduce them exactly.

#include "mono3sat/formula.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mono3sat::kernel {

inline constexpr unsigned kMaxWidth = 63;

struct MaskClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

struct MaskFormula {
  std::vector<MaskClause> clauses;
  unsigned width = 0;

  std::uint64_t space() const noexcept { return std::uint64_t{1} << width; }
};

/// order[i] is assigned to bit i. Every clause variable must appear in order.
MaskFormula compile(std::span<const Clause> clauses, std::span<const Variable> order);
/// Variable i is bit i - 1, over 1..variable_count.
MaskFormula compile(const CnfFormula &f);

inline bool satisfied(const MaskFormula &m, std::uint64_t a) noexcept {
  for (const auto &c : m.clauses)
    if (((a & c.pos) | (~a & c.neg)) == 0)
      return false;
  return true;
}

/// Aggregate over all models: count, bitwise AND and OR of every model, and
/// the smallest model counter.
struct Census {
  std::uint64_t models = 0;
  std::uint64_t all_models_and = ~std::uint64_t{0};
  std::uint64_t all_models_or = 0;
  std::optional<std::uint64_t> first;

  bool operator==(const Census &) const = default;
};

namespace serial {
Census census(const MaskFormula &m);
std::optional<std::uint64_t> first_model(const MaskFormula &m);
} // namespace serial

namespace parallel {
/// threads == 0 uses the OpenMP default team size.
Census census(const MaskFormula &m, int threads = 0);
std::optional<std::uint64_t> first_model(const MaskFormula &m, int threads = 0);
} // namespace parallel

} // namespace mono3sat::kernel
