#pragma once

#include <cstdint>

namespace opk {

// Size formulas of the kernelization, parametrized by the provider factor c
// and the decomposition factor d.

constexpr std::int64_t f1(std::int64_t c) { return 14 * c * c + 60 * c; }
constexpr std::int64_t f2(std::int64_t c) { return 4 * c * c + 15 * c; }
constexpr std::int64_t f3(std::int64_t c) { return 3 * f1(c) + 24 * f2(c); }
constexpr std::int64_t f4(std::int64_t c, std::int64_t d) { return c * d + 6 * c + 4 * d; }
constexpr std::int64_t f5(std::int64_t c, std::int64_t d) {
  return 24 * (20 * f4(c, d) + d + c + c * c);
}

constexpr std::int64_t reducible_block_threshold = 6288;
constexpr std::int64_t protrusion_threshold = 25 * 6288;

inline __int128 pow4(std::int64_t x) {
  __int128 v = x;
  return v * v * v * v;
}

// |V|, |E| of the final instance are at most 2*(25*6288+5)*f5(c,f3(c))*(k+3)^4.
inline __int128 kernel_size_bound(std::int64_t c, std::int64_t k_out) {
  return 2 * static_cast<__int128>(protrusion_threshold + 5) * f5(c, f3(c)) * pow4(k_out + 3);
}

}  // namespace opk
