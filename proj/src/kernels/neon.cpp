#include <arm_neon.h>

#include "ogc/kernels.hpp"

namespace ogc::kernels::detail {

namespace {

inline std::size_t zeros_in(uint8x16_t v) {
  const uint8x16_t z = vshrq_n_u8(vceqzq_u8(v), 7);
  return vaddvq_u8(z);
}

std::size_t neon_xor(std::uint8_t* acc, const std::uint8_t* row, std::size_t n) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; i += 16) {
    const uint8x16_t x = veorq_u8(vld1q_u8(acc + i), vld1q_u8(row + i));
    vst1q_u8(acc + i, x);
    zeros += zeros_in(x);
  }
  return padded_length(n) - zeros;
}

std::size_t neon_addmod(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  if (p > kMaxSimdPrime) return scalar_addmod(acc, row, n, p);
  const uint8x16_t vp = vdupq_n_u8(p);
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; i += 16) {
    const uint8x16_t s = vaddq_u8(vld1q_u8(acc + i), vld1q_u8(row + i));
    const uint8x16_t x = vminq_u8(s, vsubq_u8(s, vp));
    vst1q_u8(acc + i, x);
    zeros += zeros_in(x);
  }
  return padded_length(n) - zeros;
}

std::size_t neon_count(const std::uint8_t* v, std::size_t n) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; i += 16) zeros += zeros_in(vld1q_u8(v + i));
  return padded_length(n) - zeros;
}

const KernelSet kNeon{"neon", neon_xor, neon_addmod, scalar_table, neon_count};

}  // namespace

const KernelSet* neon_set() { return &kNeon; }

}  // namespace ogc::kernels::detail
