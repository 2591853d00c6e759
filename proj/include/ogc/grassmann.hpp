#pragma once

// Subspace representatives, l-minors, the minor space Delta(l, m) and the
// column-transform calculus acting on it.
//
// Column sets are 1-based ({1..m}) to match the usual "456" naming; matrix
// indices are 0-based.  Coefficient vectors of MinorFunction are indexed by
// column sets in lexicographic order (123, 124, ..., 456 for l=3, m=6).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ogc/gf.hpp"
#include "ogc/matrix.hpp"

namespace ogc::grassmann {

/// Strictly increasing set of 1-based column indices.
class ColumnSet {
 public:
  ColumnSet() = default;
  ColumnSet(std::initializer_list<int> cols);
  explicit ColumnSet(std::vector<int> cols);
  /// Digits form, e.g. "456" (columns 1..9 only).
  static ColumnSet parse(std::string_view digits);

  std::size_t size() const noexcept { return cols_.size(); }
  bool empty() const noexcept { return cols_.empty(); }
  bool contains(int c) const noexcept;
  int operator[](std::size_t i) const { return cols_[i]; }
  const std::vector<int>& values() const noexcept { return cols_; }
  auto begin() const noexcept { return cols_.begin(); }
  auto end() const noexcept { return cols_.end(); }

  std::string to_string() const;

  friend auto operator<=>(const ColumnSet&, const ColumnSet&) = default;

 private:
  std::vector<int> cols_;
};

/// All l-subsets of {1..m} in lexicographic order.
const std::vector<ColumnSet>& column_sets(std::size_t ell, std::size_t m);
/// Position of `a` in column_sets(a.size(), m).
std::size_t column_set_index(const ColumnSet& a, std::size_t m);

struct RrefResult {
  Matrix canonical;
  ColumnSet pivots;
};

/// Row reduction scanning columns from m down to 1.  The k-th pivot found
/// (largest column first) is placed in row k and scaled to 1; every pivot
/// column is a unit vector.  Throws RankDeficient when rank < rows.
RrefResult rref_right_to_left(const Matrix& m);

/// Determinant of the l x l submatrix on columns `a`.
gf::Elem minor(const Matrix& m, const ColumnSet& a);

class MinorFunction {
 public:
  /// Empty placeholder without a field; assign before use.
  MinorFunction() = default;
  MinorFunction(gf::FieldPtr field, std::size_t ell = 3, std::size_t m = 6);
  MinorFunction(gf::FieldPtr field, std::vector<gf::Elem> coeffs, std::size_t ell = 3, std::size_t m = 6);

  static MinorFunction single(gf::FieldPtr field, const ColumnSet& a, std::size_t m = 6);
  /// Linear combination from (column set, integer coefficient) terms; the
  /// integers are mapped into the prime subfield.
  static MinorFunction from_terms(gf::FieldPtr field, std::initializer_list<std::pair<std::string_view, long long>> terms);

  const gf::FieldPtr& field() const noexcept { return field_; }
  std::size_t ell() const noexcept { return ell_; }
  std::size_t m() const noexcept { return m_; }
  std::span<const gf::Elem> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  gf::Elem coeff(const ColumnSet& a) const { return coeffs_[column_set_index(a, m_)]; }
  gf::Elem coeff(std::size_t index) const { return coeffs_[index]; }
  void set(const ColumnSet& a, gf::Elem v) { coeffs_[column_set_index(a, m_)] = v; }
  void set(std::size_t index, gf::Elem v) { coeffs_[index] = v; }

  bool is_zero() const noexcept;

  MinorFunction operator+(const MinorFunction& rhs) const;
  MinorFunction scaled(gf::Elem s) const;

  friend bool operator==(const MinorFunction& a, const MinorFunction& b) {
    return a.ell_ == b.ell_ && a.m_ == b.m_ && a.coeffs_ == b.coeffs_ && a.field_->same_as(*b.field_);
  }

 private:
  gf::FieldPtr field_;
  std::size_t ell_ = 3;
  std::size_t m_ = 6;
  std::vector<gf::Elem> coeffs_;
};

/// f(M) = sum_A f_A det_A(M).
gf::Elem evaluate(const MinorFunction& f, const Matrix& m);

/// Column sets carrying a nonzero coefficient, in lexicographic order.
std::vector<ColumnSet> support(const MinorFunction& f);

/// Reflected complement { m+1-i : i not in A }.
ColumnSet istar(const ColumnSet& a, std::size_t ell, std::size_t m);

struct RcSets {
  /// Reduced row indices { r : i_{l+1-r} in I \ A } (1-based).
  std::vector<int> rows;
  /// Reduced column indices { s : n_s in N cap A }, N = [2l] \ I (1-based).
  std::vector<int> cols;
};

/// Throws InvalidPivot unless I = istar(I).
RcSets rc_sets(const ColumnSet& a, const ColumnSet& pivots, std::size_t ell);
bool is_principal(const ColumnSet& a, const ColumnSet& pivots, std::size_t ell);

/// Exponent sum_{i_r = a_j} (l - r + j + 1) from the cofactor expansion along
/// the pivot columns shared by A and I, each taken in isolation.
int expansion_sign_exponent(const ColumnSet& a, const ColumnSet& pivots, std::size_t ell);

/// det_A(M) through the reduced minor of the non-pivot block of M.
/// The pivot columns of A form an anti-diagonal block in rows l+1-r, so the
/// full sign is (-1)^{expansion exponent + t(t-1)/2}, t = |A cap I|.
/// M must be right-to-left canonical with a self-paired pivot set.
gf::Elem expand_minor(const Matrix& m, const ColumnSet& a);

/// Invertible m x m matrix T acting on representatives by M -> M T.  The
/// l-th compound matrix is computed once at construction.
class ColumnTransform {
 public:
  explicit ColumnTransform(Matrix t);

  static ColumnTransform identity(gf::FieldPtr field, std::size_t m = 6);

  const Matrix& matrix() const noexcept { return t_; }
  std::size_t m() const noexcept { return t_.rows(); }
  std::size_t ell() const noexcept { return t_.rows() / 2; }
  /// compound()(B, A) = det T[B, A].
  const Matrix& compound() const noexcept { return compound_; }

  /// Matrix product (this * rhs): applying the result equals applying `rhs`
  /// after `this` on representatives.
  ColumnTransform operator*(const ColumnTransform& rhs) const;

  friend bool operator==(const ColumnTransform& a, const ColumnTransform& b) { return a.t_ == b.t_; }

 private:
  Matrix t_;
  Matrix compound_;
};

/// g with g(M) = f(M T) for all M (Cauchy-Binet on the compound matrix).
MinorFunction apply_transform(const MinorFunction& f, const ColumnTransform& t);

/// C_i + a C_j -> C_i together with C_{2l+1-j} - a C_{2l+1-i} -> C_{2l+1-j}
/// (1-based).  Requires i != j and i != 2l+1-j.
ColumnTransform paired_column_operation(const gf::FieldPtr& field, int i, int j, gf::Elem a, std::size_t ell = 3);

/// Column i goes to eta(i) for i <= l and to 2l+1-eta(2l+1-i) for i > l.
/// `eta` is a 1-based permutation of {1..l}.
ColumnTransform mirrored_permutation(const gf::FieldPtr& field, std::span<const int> eta);

/// Substitution f(X_{s_1} | ... | X_{s_m}): new column k is old column
/// sources[k-1] (1-based).
ColumnTransform column_substitution(const gf::FieldPtr& field, std::span<const int> sources);

/// The 2^l l! column permutations that map each pair {i, 2l+1-i} onto a
/// pair.  They preserve Q and B and hence the polar Grassmannian.
std::vector<ColumnTransform> pair_preserving_permutations(const gf::FieldPtr& field, std::size_t ell = 3);

struct NormalizedFunction {
  MinorFunction g;
  ColumnTransform transform;
};

/// If supp(f) holds a self-paired set, a pair-preserving permutation T with
/// 123 in supp(apply_transform(f, T)); weight is unchanged.  Throws
/// InvalidPivot when no self-paired set is present.
NormalizedFunction move_principal_to_123(const MinorFunction& f);
/// Same with a set A != A* and target 125.
NormalizedFunction move_nonprincipal_to_125(const MinorFunction& f);

}  // namespace ogc::grassmann
