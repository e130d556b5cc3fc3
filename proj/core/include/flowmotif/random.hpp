#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace flowmotif {

/// Unbiased draw from [0, bound) via rejection sampling. mt19937_64 output
/// is pinned by the standard, so results are platform-independent (unlike
/// std::uniform_int_distribution / std::shuffle).
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::mt19937_64::max();
  const std::uint64_t zone = max - (max % bound + 1) % bound;
  for (;;) {
    std::uint64_t r = rng();
    if (r <= zone) return r % bound;
  }
}

/// Deterministic Fisher-Yates shuffle built on draw_below.
template <typename T>
void deterministic_shuffle(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(draw_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace flowmotif
