#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ordercraft {

// Deterministic helpers: std::uniform_int_distribution and std::shuffle are
// implementation-defined, which would break frozen seeds across toolchains.

inline std::uint64_t rand_u64(std::mt19937_64& rng) { return rng(); }

inline long long rand_int(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <typename T>
void fisher_yates(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace ordercraft
