#include "ogc/forms.hpp"

#include "ogc/error.hpp"

namespace ogc::forms {

FormSpace::FormSpace(gf::FieldPtr field, std::size_t ell) : field_(std::move(field)), ell_(ell) {
  if (ell_ < 1) throw DimensionMismatch("form space needs ell >= 1");
}

void FormSpace::check(std::span<const gf::Elem> x) const {
  if (x.size() != m()) throw DimensionMismatch("vector of length " + std::to_string(x.size()) + ", expected " +
                                               std::to_string(m()));
}

gf::Elem FormSpace::bilinear(std::span<const gf::Elem> x, std::span<const gf::Elem> y) const {
  check(x);
  check(y);
  const auto& F = *field_;
  const std::size_t n = m();
  gf::Elem acc = F.zero();
  for (std::size_t i = 0; i < n; ++i) acc = F.add(acc, F.mul(x[i], y[n - 1 - i]));
  return acc;
}

gf::Elem FormSpace::quadratic(std::span<const gf::Elem> x) const {
  check(x);
  const auto& F = *field_;
  const std::size_t n = m();
  gf::Elem acc = F.zero();
  for (std::size_t i = 0; i < ell_; ++i) acc = F.add(acc, F.mul(x[i], x[n - 1 - i]));
  return acc;
}

bool FormSpace::is_totally_singular(const Matrix& rows) const {
  if (rows.cols() != m()) throw DimensionMismatch("matrix has " + std::to_string(rows.cols()) + " columns, expected " +
                                                  std::to_string(m()));
  if (rows.rows() != ell_) throw DimensionMismatch("matrix has " + std::to_string(rows.rows()) + " rows, expected " +
                                                   std::to_string(ell_));
  if (!rows.field()->same_as(*field_)) throw SpecMismatch("matrix over a different field");
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    if (!quadratic(rows.row(r)).is_zero()) return false;
    for (std::size_t s = r + 1; s < rows.rows(); ++s)
      if (!bilinear(rows.row(r), rows.row(s)).is_zero()) return false;
  }
  return true;
}

}  // namespace ogc::forms
