#pragma once

// The split symmetric bilinear form B(x, y) = sum_{i=1}^{2l} x_i y_{2l+1-i}
// and the hyperbolic quadratic form Q(x) = sum_{i=1}^{l} x_i x_{2l+1-i} on
// F_q^{2l}.  The Gram matrix (anti-identity) is never built.

#include <span>

#include "ogc/gf.hpp"
#include "ogc/matrix.hpp"

namespace ogc::forms {

class FormSpace {
 public:
  FormSpace(gf::FieldPtr field, std::size_t ell);

  std::size_t ell() const noexcept { return ell_; }
  std::size_t m() const noexcept { return 2 * ell_; }
  const gf::FieldPtr& field() const noexcept { return field_; }

  gf::Elem bilinear(std::span<const gf::Elem> x, std::span<const gf::Elem> y) const;
  /// Evaluated directly; in characteristic 2 it is not determined by B.
  gf::Elem quadratic(std::span<const gf::Elem> x) const;

  /// Q vanishes on every row and B on every pair of rows.  By the
  /// polarization identity Q(v + w) = Q(v) + Q(w) + B(v, w) this is
  /// equivalent to the whole rowspace being totally singular.
  bool is_totally_singular(const Matrix& rows) const;

 private:
  void check(std::span<const gf::Elem> x) const;

  gf::FieldPtr field_;
  std::size_t ell_;
};

}  // namespace ogc::forms
