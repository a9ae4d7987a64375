// Seeded randomness helpers. std::mt19937 output is pinned by the standard;
// the bounded draw and shuffle below replace std::uniform_int_distribution
// and std::shuffle, whose sequences vary across standard libraries.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace vertebrate {

// Unbiased draw from [0, n) via rejection sampling.
inline std::uint32_t draw_below(std::mt19937& gen, std::uint32_t n) {
  const std::uint32_t threshold = static_cast<std::uint32_t>(-n) % n;
  for (;;) {
    const std::uint32_t r = gen();
    if (r >= threshold) return r % n;
  }
}

// Fisher-Yates.
template <typename T>
void seeded_shuffle(std::vector<T>& items, std::mt19937& gen) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = draw_below(gen, static_cast<std::uint32_t>(i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace vertebrate
