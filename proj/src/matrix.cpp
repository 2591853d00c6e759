#include "ogc/matrix.hpp"

#include <sstream>
#include <utility>

#include "ogc/error.hpp"

namespace ogc {

Matrix::Matrix(gf::FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::from_ints(gf::FieldPtr field, std::size_t rows, std::size_t cols,
                         std::initializer_list<long long> values) {
  if (values.size() != rows * cols) throw DimensionMismatch("from_ints: wrong number of entries");
  Matrix m(field, rows, cols);
  std::size_t i = 0;
  for (long long v : values) {
    m.data_[i++] = (v >= 0 && static_cast<unsigned long long>(v) < field->q())
                       ? gf::Elem{static_cast<std::uint32_t>(v)}
                       : field->from_int(v);
  }
  return m;
}

Matrix Matrix::identity(gf::FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = gf::Elem{1};
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (!field_->same_as(*rhs.field_)) throw SpecMismatch("matrix product over different fields");
  const auto& F = *field_;
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const gf::Elem a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) = F.add(out(i, j), F.mul(a, rhs(k, j)));
    }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

void Matrix::swap_columns(std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

std::size_t Matrix::rank() const {
  const auto& F = *field_;
  std::vector<gf::Elem> a(data_);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rank;
    while (piv < rows_ && a[piv * cols_ + c].is_zero()) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a[piv * cols_ + j], a[rank * cols_ + j]);
    const gf::Elem s = F.inv(a[rank * cols_ + c]);
    for (std::size_t j = 0; j < cols_; ++j) a[rank * cols_ + j] = F.mul(s, a[rank * cols_ + j]);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      const gf::Elem f = a[r * cols_ + c];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        a[r * cols_ + j] = F.sub(a[r * cols_ + j], F.mul(f, a[rank * cols_ + j]));
    }
    ++rank;
  }
  return rank;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).rep;
    os << '\n';
  }
  return os.str();
}

gf::Elem determinant(const gf::Field& F, std::span<const gf::Elem> a, std::size_t n) {
  if (a.size() != n * n) throw DimensionMismatch("determinant: entry count does not match n*n");
  switch (n) {
    case 0:
      return F.one();
    case 1:
      return a[0];
    case 2:
      return F.sub(F.mul(a[0], a[3]), F.mul(a[1], a[2]));
    case 3: {
      const gf::Elem t0 = F.mul(a[0], F.sub(F.mul(a[4], a[8]), F.mul(a[5], a[7])));
      const gf::Elem t1 = F.mul(a[1], F.sub(F.mul(a[3], a[8]), F.mul(a[5], a[6])));
      const gf::Elem t2 = F.mul(a[2], F.sub(F.mul(a[3], a[7]), F.mul(a[4], a[6])));
      return F.add(F.sub(t0, t1), t2);
    }
    default:
      break;
  }
  // Cofactor expansion along the first row.
  gf::Elem total = F.zero();
  std::vector<gf::Elem> minor((n - 1) * (n - 1));
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c].is_zero()) continue;
    std::size_t k = 0;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[k++] = a[r * n + j];
    const gf::Elem term = F.mul(a[c], determinant(F, minor, n - 1));
    total = (c % 2 == 0) ? F.add(total, term) : F.sub(total, term);
  }
  return total;
}

gf::Elem submatrix_determinant(const Matrix& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw DimensionMismatch("submatrix_determinant: non-square selection");
  const std::size_t n = rows.size();
  std::vector<gf::Elem> sub(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sub[i * n + j] = m(rows[i], cols[j]);
  return determinant(*m.field(), sub, n);
}

}  // namespace ogc
