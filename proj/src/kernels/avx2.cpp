#include <immintrin.h>

#include "ogc/kernels.hpp"

namespace ogc::kernels::detail {

namespace {

inline std::size_t zeros_in(__m256i v) {
  const __m256i z = _mm256_cmpeq_epi8(v, _mm256_setzero_si256());
  return static_cast<std::size_t>(_mm_popcnt_u32(static_cast<unsigned>(_mm256_movemask_epi8(z))));
}

std::size_t avx2_xor(std::uint8_t* acc, const std::uint8_t* row, std::size_t n) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i x = _mm256_xor_si256(a, b);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), x);
    zeros += zeros_in(x);
  }
  return padded_length(n) - zeros;
}

std::size_t avx2_addmod(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  if (p > kMaxSimdPrime) return scalar_addmod(acc, row, n, p);
  // a + b <= 2p - 2 fits in a byte; min(x, x - p) picks x - p exactly when x >= p.
  const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i s = _mm256_add_epi8(a, b);
    const __m256i x = _mm256_min_epu8(s, _mm256_sub_epi8(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), x);
    zeros += zeros_in(x);
  }
  return padded_length(n) - zeros;
}

std::size_t avx2_count(const std::uint8_t* v, std::size_t n) {
  std::size_t zeros = 0;
  for (std::size_t i = 0; i < n; i += 32) zeros += zeros_in(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i)));
  return padded_length(n) - zeros;
}

const KernelSet kAvx2{"avx2", avx2_xor, avx2_addmod, scalar_table, avx2_count};

}  // namespace

const KernelSet* avx2_set() { return &kAvx2; }

}  // namespace ogc::kernels::detail
