#include "mono3sat/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

namespace mono3sat::kernel::parallel {

namespace {

constexpr unsigned kChunkBits = 12;
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

int team_size(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

} // namespace

Census census(const MaskFormula &m, int threads) {
  const std::uint64_t space = m.space();
  const unsigned chunk_bits = std::min(kChunkBits, m.width);
  const std::uint64_t chunk = std::uint64_t{1} << chunk_bits;
  const auto chunks = static_cast<std::int64_t>(space >> chunk_bits);

  std::uint64_t models = 0;
  std::uint64_t all_and = ~std::uint64_t{0};
  std::uint64_t all_or = 0;
  std::uint64_t first = kNone;

#pragma omp parallel for num_threads(team_size(threads)) schedule(static) \
    reduction(+ : models) reduction(& : all_and) reduction(| : all_or) reduction(min : first)
  for (std::int64_t k = 0; k < chunks; ++k) {
    const std::uint64_t base = static_cast<std::uint64_t>(k) << chunk_bits;
    for (std::uint64_t a = base; a < base + chunk; ++a) {
      if (!satisfied(m, a))
        continue;
      ++models;
      all_and &= a;
      all_or |= a;
      first = std::min(first, a);
    }
  }

  Census c;
  c.models = models;
  c.all_models_and = all_and;
  c.all_models_or = all_or;
  if (first != kNone)
    c.first = first;
  return c;
}

std::optional<std::uint64_t> first_model(const MaskFormula &m, int threads) {
  const std::uint64_t space = m.space();
  const unsigned chunk_bits = std::min(kChunkBits, m.width);
  const std::uint64_t chunk = std::uint64_t{1} << chunk_bits;
  const int team = team_size(threads);
  // Scan ascending windows of one chunk per thread; the first window holding
  // a model yields the global minimum.
  const std::uint64_t window = chunk * static_cast<std::uint64_t>(team);

  for (std::uint64_t start = 0; start < space; start += window) {
    const std::uint64_t stop = std::min(space, start + window);
    const auto chunks = static_cast<std::int64_t>((stop - start + chunk - 1) / chunk);
    std::uint64_t found = kNone;

#pragma omp parallel for num_threads(team) schedule(static, 1) reduction(min : found)
    for (std::int64_t k = 0; k < chunks; ++k) {
      const std::uint64_t base = start + static_cast<std::uint64_t>(k) * chunk;
      const std::uint64_t end = std::min(stop, base + chunk);
      for (std::uint64_t a = base; a < end; ++a)
        if (satisfied(m, a)) {
          found = std::min(found, a);
          break;
        }
    }
    if (found != kNone)
      return found;
  }
  return std::nullopt;
}

} // namespace mono3sat::kernel::parallel
