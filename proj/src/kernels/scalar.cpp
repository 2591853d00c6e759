#include "ogc/kernels.hpp"

namespace ogc::kernels::detail {

std::size_t scalar_xor(std::uint8_t* acc, const std::uint8_t* row, std::size_t n) {
  std::size_t nz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] ^= row[i];
    nz += acc[i] != 0;
  }
  return nz;
}

std::size_t scalar_addmod(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, std::uint8_t p) {
  std::size_t nz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned x = static_cast<unsigned>(acc[i]) + row[i];
    if (x >= p) x -= p;
    acc[i] = static_cast<std::uint8_t>(x);
    nz += x != 0;
  }
  return nz;
}

std::size_t scalar_table(std::uint8_t* acc, const std::uint8_t* row, std::size_t n, const std::uint8_t* add_table,
                         std::size_t q) {
  std::size_t nz = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] = add_table[acc[i] * q + row[i]];
    nz += acc[i] != 0;
  }
  return nz;
}

std::size_t scalar_count(const std::uint8_t* v, std::size_t n) {
  std::size_t nz = 0;
  for (std::size_t i = 0; i < n; ++i) nz += v[i] != 0;
  return nz;
}

}  // namespace ogc::kernels::detail
