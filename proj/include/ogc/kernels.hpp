#pragma once

// Inner loops of the codeword enumeration: add one scaled basis row into the
// running codeword and count its nonzero coordinates.  Codewords are stored
// one byte per coordinate (the field encoding), zero-padded to a multiple of
// kRowAlign bytes.  Padding stays zero under every kernel and never counts.
//
// A scalar reference set is always present; SIMD sets are chosen at runtime
// and must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ogc::kernels {

inline constexpr std::size_t kRowAlign = 32;

constexpr std::size_t padded_length(std::size_t n) noexcept { return (n + kRowAlign - 1) / kRowAlign * kRowAlign; }

struct KernelSet {
  std::string_view name;
  /// acc ^= row (characteristic 2); returns the nonzero count of acc.
  std::size_t (*xor_accumulate)(std::uint8_t* acc, const std::uint8_t* row, std::size_t n);
  /// acc = (acc + row) mod p for a prime p <= kMaxSimdPrime, entries < p.
  std::size_t (*addmod_accumulate)(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p);
  /// acc = add_table[acc * q + row] (general F_q addition).
  std::size_t (*table_accumulate)(std::uint8_t* acc, const std::uint8_t* row, std::size_t n,
                                  const std::uint8_t* add_table, std::size_t q);
  std::size_t (*count_nonzero)(const std::uint8_t* v, std::size_t n);
};

inline constexpr unsigned kMaxSimdPrime = 128;

const KernelSet& scalar();
/// Null when the build or the CPU lacks the instruction set.
const KernelSet* avx2();
const KernelSet* neon();

/// Best set for this CPU.  Setting OGC_KERNELS=scalar in the environment
/// forces the reference kernels.
const KernelSet& best();
std::vector<const KernelSet*> available();

namespace detail {
std::size_t scalar_xor(std::uint8_t* acc, const std::uint8_t* row, std::size_t n);
std::size_t scalar_addmod(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p);
std::size_t scalar_table(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, const std::uint8_t* add_table,
                         std::size_t q);
std::size_t scalar_count(const std::uint8_t* v, std::size_t n);
const KernelSet* avx2_set();
const KernelSet* neon_set();
}  // namespace detail

}  // namespace ogc::kernels
