#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace krorb {

// Unbiased integer draw in [lo, hi] from a seeded engine.
// std::uniform_int_distribution is not pinned across standard libraries, so
// seeded runs would not replay bit-for-bit; this rejection draw does.
inline std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

}  // namespace krorb
