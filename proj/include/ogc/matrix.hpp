#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ogc/gf.hpp"

namespace ogc {

/// Dense row-major matrix over a finite field.  Indices are 0-based.
class Matrix {
 public:
  Matrix() = default;
  Matrix(gf::FieldPtr field, std::size_t rows, std::size_t cols);
  /// Entries given as integers, reduced into the prime subfield when they lie
  /// outside [0, q) (so -1 means the additive inverse of 1).
  static Matrix from_ints(gf::FieldPtr field, std::size_t rows, std::size_t cols, std::initializer_list<long long> values);
  static Matrix identity(gf::FieldPtr field, std::size_t n);

  const gf::FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  gf::Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  gf::Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const gf::Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<gf::Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const gf::Elem> data() const noexcept { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix transposed() const;
  void swap_columns(std::size_t a, std::size_t b);

  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
           (a.field_ == b.field_ || (a.field_ && b.field_ && a.field_->same_as(*b.field_)));
  }

 private:
  gf::FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<gf::Elem> data_;
};

/// Determinant of the square matrix given row-major in `entries` (n x n).
/// Closed forms for n <= 3, cofactor expansion above; division-free.
gf::Elem determinant(const gf::Field& field, std::span<const gf::Elem> entries, std::size_t n);

/// Determinant of the submatrix of `m` on the given rows and columns (0-based).
gf::Elem submatrix_determinant(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

}  // namespace ogc
