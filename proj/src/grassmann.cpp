#include "ogc/grassmann.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "ogc/error.hpp"

namespace ogc::grassmann {

namespace {

void validate_sorted(const std::vector<int>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] < 1) throw DimensionMismatch("column index must be >= 1");
    if (i && cols[i] <= cols[i - 1]) throw DimensionMismatch("column set must be strictly increasing");
  }
}

std::vector<ColumnSet> generate_sets(std::size_t ell, std::size_t m) {
  std::vector<ColumnSet> out;
  if (ell > m) return out;
  std::vector<int> cur(ell);
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = ell;
    while (i > 0 && cur[i - 1] == static_cast<int>(m - ell + i)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < ell; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void check_permutation(std::span<const int> perm, std::size_t n, const char* what) {
  std::vector<bool> seen(n + 1, false);
  if (perm.size() != n) throw DimensionMismatch(std::string(what) + ": wrong length");
  for (int v : perm) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[v])
      throw DimensionMismatch(std::string(what) + ": not a permutation");
    seen[v] = true;
  }
}

}  // namespace

ColumnSet::ColumnSet(std::initializer_list<int> cols) : cols_(cols) { validate_sorted(cols_); }

ColumnSet::ColumnSet(std::vector<int> cols) : cols_(std::move(cols)) { validate_sorted(cols_); }

ColumnSet ColumnSet::parse(std::string_view digits) {
  std::vector<int> cols;
  for (char c : digits) {
    if (c < '1' || c > '9') throw ParseError("bad column set '" + std::string(digits) + "'");
    cols.push_back(c - '0');
  }
  try {
    return ColumnSet(std::move(cols));
  } catch (const DimensionMismatch&) {
    throw ParseError("column set '" + std::string(digits) + "' is not strictly increasing");
  }
}

bool ColumnSet::contains(int c) const noexcept { return std::binary_search(cols_.begin(), cols_.end(), c); }

std::string ColumnSet::to_string() const {
  std::string s;
  for (int c : cols_) {
    if (c < 10) {
      s += static_cast<char>('0' + c);
    } else {
      s += '(' + std::to_string(c) + ')';
    }
  }
  return s;
}

const std::vector<ColumnSet>& column_sets(std::size_t ell, std::size_t m) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<ColumnSet>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({ell, m});
  if (it == cache.end()) it = cache.emplace(std::pair{ell, m}, generate_sets(ell, m)).first;
  return it->second;
}

std::size_t column_set_index(const ColumnSet& a, std::size_t m) {
  const auto& sets = column_sets(a.size(), m);
  auto it = std::lower_bound(sets.begin(), sets.end(), a);
  if (it == sets.end() || *it != a)
    throw DimensionMismatch("column set " + a.to_string() + " is not a subset of [" + std::to_string(m) + "]");
  return static_cast<std::size_t>(it - sets.begin());
}

RrefResult rref_right_to_left(const Matrix& m) {
  const auto& F = *m.field();
  Matrix a = m;
  std::vector<int> pivots;
  std::size_t next = 0;
  for (std::size_t c = m.cols(); c-- > 0 && next < m.rows();) {
    std::size_t r = next;
    while (r < m.rows() && a(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != next)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(a(r, j), a(next, j));
    const gf::Elem s = F.inv(a(next, c));
    for (std::size_t j = 0; j < m.cols(); ++j) a(next, j) = F.mul(s, a(next, j));
    for (std::size_t rr = 0; rr < m.rows(); ++rr) {
      if (rr == next) continue;
      const gf::Elem f = a(rr, c);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) a(rr, j) = F.sub(a(rr, j), F.mul(f, a(next, j)));
    }
    pivots.push_back(static_cast<int>(c + 1));
    ++next;
  }
  if (next < m.rows())
    throw RankDeficient("matrix has rank " + std::to_string(next) + " < " + std::to_string(m.rows()));
  std::sort(pivots.begin(), pivots.end());
  return {std::move(a), ColumnSet(std::move(pivots))};
}

gf::Elem minor(const Matrix& m, const ColumnSet& a) {
  const std::size_t n = m.rows();
  if (a.size() != n) throw DimensionMismatch("minor: column set size differs from row count");
  std::vector<gf::Elem> sub(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    if (static_cast<std::size_t>(a[j]) > m.cols()) throw DimensionMismatch("minor: column out of range");
    for (std::size_t r = 0; r < n; ++r) sub[r * n + j] = m(r, a[j] - 1);
  }
  return determinant(*m.field(), sub, n);
}

MinorFunction::MinorFunction(gf::FieldPtr field, std::size_t ell, std::size_t m)
    : field_(std::move(field)), ell_(ell), m_(m), coeffs_(column_sets(ell, m).size()) {}

MinorFunction::MinorFunction(gf::FieldPtr field, std::vector<gf::Elem> coeffs, std::size_t ell, std::size_t m)
    : field_(std::move(field)), ell_(ell), m_(m), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != column_sets(ell, m).size())
    throw DimensionMismatch("minor function needs " + std::to_string(column_sets(ell, m).size()) + " coefficients");
  for (auto c : coeffs_) field_->element(c.rep);
}

MinorFunction MinorFunction::single(gf::FieldPtr field, const ColumnSet& a, std::size_t m) {
  MinorFunction f(std::move(field), a.size(), m);
  f.set(a, gf::Elem{1});
  return f;
}

MinorFunction MinorFunction::from_terms(gf::FieldPtr field,
                                        std::initializer_list<std::pair<std::string_view, long long>> terms) {
  MinorFunction f(field);
  for (const auto& [name, c] : terms) {
    const ColumnSet a = ColumnSet::parse(name);
    f.set(a, field->add(f.coeff(a), field->from_int(c)));
  }
  return f;
}

bool MinorFunction::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](gf::Elem c) { return c.is_zero(); });
}

MinorFunction MinorFunction::operator+(const MinorFunction& rhs) const {
  if (!field_->same_as(*rhs.field_)) throw SpecMismatch("adding minor functions over different fields");
  if (coeffs_.size() != rhs.coeffs_.size()) throw DimensionMismatch("adding minor functions of different shape");
  MinorFunction out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = field_->add(coeffs_[i], rhs.coeffs_[i]);
  return out;
}

MinorFunction MinorFunction::scaled(gf::Elem s) const {
  MinorFunction out = *this;
  for (auto& c : out.coeffs_) c = field_->mul(s, c);
  return out;
}

gf::Elem evaluate(const MinorFunction& f, const Matrix& m) {
  if (!f.field()->same_as(*m.field())) throw SpecMismatch("evaluate: function and matrix over different fields");
  if (m.rows() != f.ell() || m.cols() != f.m()) throw DimensionMismatch("evaluate: matrix shape");
  const auto& F = *f.field();
  const auto& sets = column_sets(f.ell(), f.m());
  gf::Elem acc = F.zero();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const gf::Elem c = f.coeff(i);
    if (!c.is_zero()) acc = F.add(acc, F.mul(c, minor(m, sets[i])));
  }
  return acc;
}

std::vector<ColumnSet> support(const MinorFunction& f) {
  std::vector<ColumnSet> out;
  const auto& sets = column_sets(f.ell(), f.m());
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!f.coeff(i).is_zero()) out.push_back(sets[i]);
  return out;
}

ColumnSet istar(const ColumnSet& a, std::size_t ell, std::size_t m) {
  if (m != 2 * ell) throw DimensionMismatch("istar needs m = 2l");
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(m); ++i)
    if (!a.contains(i)) out.push_back(static_cast<int>(m) + 1 - i);
  std::sort(out.begin(), out.end());
  return ColumnSet(std::move(out));
}

namespace {

void require_self_paired(const ColumnSet& pivots, std::size_t ell) {
  if (pivots.size() != ell || istar(pivots, ell, 2 * ell) != pivots)
    throw InvalidPivot("pivot set " + pivots.to_string() + " is not self-paired");
}

std::vector<int> complement(const ColumnSet& s, std::size_t m) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(m); ++i)
    if (!s.contains(i)) out.push_back(i);
  return out;
}

}  // namespace

RcSets rc_sets(const ColumnSet& a, const ColumnSet& pivots, std::size_t ell) {
  require_self_paired(pivots, ell);
  RcSets out;
  for (std::size_t r = 1; r <= ell; ++r) {
    const int i = pivots[ell - r];  // i_{l+1-r}
    if (!a.contains(i)) out.rows.push_back(static_cast<int>(r));
  }
  const auto n = complement(pivots, 2 * ell);
  for (std::size_t s = 1; s <= n.size(); ++s)
    if (a.contains(n[s - 1])) out.cols.push_back(static_cast<int>(s));
  return out;
}

bool is_principal(const ColumnSet& a, const ColumnSet& pivots, std::size_t ell) {
  const auto rc = rc_sets(a, pivots, ell);
  return rc.rows == rc.cols;
}

int expansion_sign_exponent(const ColumnSet& a, const ColumnSet& pivots, std::size_t ell) {
  int total = 0;
  for (std::size_t r = 1; r <= pivots.size(); ++r)
    for (std::size_t j = 1; j <= a.size(); ++j)
      if (pivots[r - 1] == a[j - 1]) total += static_cast<int>(ell) - static_cast<int>(r) + static_cast<int>(j) + 1;
  return total;
}

gf::Elem expand_minor(const Matrix& m, const ColumnSet& a) {
  const std::size_t ell = m.rows();
  if (m.cols() != 2 * ell) throw DimensionMismatch("expand_minor needs an l x 2l matrix");
  if (a.size() != ell) throw DimensionMismatch("expand_minor: column set size");
  const auto rr = rref_right_to_left(m);
  if (!(rr.canonical == m)) throw InvalidPivot("expand_minor: matrix is not in right-to-left canonical form");
  const ColumnSet& pivots = rr.pivots;
  const auto rc = rc_sets(a, pivots, ell);
  if (rc.rows.size() != rc.cols.size()) throw InvalidPivot("expand_minor: reduced minor is not square");

  const auto n = complement(pivots, 2 * ell);
  std::vector<std::size_t> rows, cols;
  for (int r : rc.rows) rows.push_back(static_cast<std::size_t>(r - 1));
  for (int s : rc.cols) cols.push_back(static_cast<std::size_t>(n[s - 1] - 1));
  const gf::Elem reduced = submatrix_determinant(m, rows, cols);

  const int t = static_cast<int>(ell - rc.rows.size());
  const int exponent = expansion_sign_exponent(a, pivots, ell) + t * (t - 1) / 2;
  return exponent % 2 == 0 ? reduced : m.field()->neg(reduced);
}

ColumnTransform::ColumnTransform(Matrix t) : t_(std::move(t)) {
  if (t_.rows() != t_.cols() || t_.rows() % 2 != 0)
    throw DimensionMismatch("column transform must be square of even order");
  if (!t_.is_invertible()) throw SingularTransform("column transform is singular");
  const std::size_t ell = t_.rows() / 2;
  const auto& sets = column_sets(ell, t_.rows());
  compound_ = Matrix(t_.field(), sets.size(), sets.size());
  std::vector<std::size_t> rows(ell), cols(ell);
  for (std::size_t b = 0; b < sets.size(); ++b) {
    for (std::size_t k = 0; k < ell; ++k) rows[k] = static_cast<std::size_t>(sets[b][k] - 1);
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t k = 0; k < ell; ++k) cols[k] = static_cast<std::size_t>(sets[a][k] - 1);
      compound_(b, a) = submatrix_determinant(t_, rows, cols);
    }
  }
}

ColumnTransform ColumnTransform::identity(gf::FieldPtr field, std::size_t m) {
  return ColumnTransform(Matrix::identity(std::move(field), m));
}

ColumnTransform ColumnTransform::operator*(const ColumnTransform& rhs) const { return ColumnTransform(t_ * rhs.t_); }

MinorFunction apply_transform(const MinorFunction& f, const ColumnTransform& t) {
  if (!f.field()->same_as(*t.matrix().field())) throw SpecMismatch("apply_transform over different fields");
  if (t.m() != f.m() || t.ell() != f.ell()) throw DimensionMismatch("apply_transform: transform size");
  const auto& F = *f.field();
  const Matrix& c = t.compound();
  std::vector<gf::Elem> g(f.size());
  for (std::size_t a = 0; a < f.size(); ++a) {
    const gf::Elem fa = f.coeff(a);
    if (fa.is_zero()) continue;
    for (std::size_t b = 0; b < f.size(); ++b) g[b] = F.add(g[b], F.mul(fa, c(b, a)));
  }
  return MinorFunction(f.field(), std::move(g), f.ell(), f.m());
}

ColumnTransform paired_column_operation(const gf::FieldPtr& field, int i, int j, gf::Elem a, std::size_t ell) {
  const int m = static_cast<int>(2 * ell);
  if (i < 1 || i > m || j < 1 || j > m) throw InvalidPair("paired column operation: index out of range");
  if (i == j) throw InvalidPair("paired column operation needs i != j");
  if (i == m + 1 - j) throw InvalidPair("paired column operation needs i != 2l+1-j");
  Matrix t = Matrix::identity(field, static_cast<std::size_t>(m));
  const int ip = m + 1 - i, jp = m + 1 - j;
  t(j - 1, i - 1) = field->add(t(j - 1, i - 1), a);
  t(ip - 1, jp - 1) = field->sub(t(ip - 1, jp - 1), a);
  return ColumnTransform(std::move(t));
}

ColumnTransform mirrored_permutation(const gf::FieldPtr& field, std::span<const int> eta) {
  const std::size_t ell = eta.size();
  check_permutation(eta, ell, "mirrored_permutation");
  const int m = static_cast<int>(2 * ell);
  Matrix t(field, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const int target = i <= static_cast<int>(ell) ? eta[i - 1] : m + 1 - eta[m - i];
    t(i - 1, target - 1) = gf::Elem{1};
  }
  return ColumnTransform(std::move(t));
}

ColumnTransform column_substitution(const gf::FieldPtr& field, std::span<const int> sources) {
  const std::size_t m = sources.size();
  check_permutation(sources, m, "column_substitution");
  Matrix t(field, m, m);
  for (std::size_t k = 0; k < m; ++k) t(sources[k] - 1, k) = gf::Elem{1};
  return ColumnTransform(std::move(t));
}

std::vector<ColumnTransform> pair_preserving_permutations(const gf::FieldPtr& field, std::size_t ell) {
  const int m = static_cast<int>(2 * ell);
  std::vector<int> pi(ell);
  std::iota(pi.begin(), pi.end(), 1);
  std::vector<ColumnTransform> out;
  do {
    for (unsigned flips = 0; flips < (1u << ell); ++flips) {
      std::vector<int> sigma(static_cast<std::size_t>(m) + 1);
      for (std::size_t i = 1; i <= ell; ++i) {
        const int target = (flips >> (i - 1)) & 1u ? m + 1 - pi[i - 1] : pi[i - 1];
        sigma[i] = target;
        sigma[m + 1 - i] = m + 1 - target;
      }
      Matrix t(field, static_cast<std::size_t>(m), static_cast<std::size_t>(m));
      for (int i = 1; i <= m; ++i) t(i - 1, sigma[i] - 1) = gf::Elem{1};
      out.emplace_back(std::move(t));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

namespace {

template <typename Pred>
NormalizedFunction normalize(const MinorFunction& f, const ColumnSet& target, Pred has_source, const char* what) {
  const auto sup = support(f);
  if (std::none_of(sup.begin(), sup.end(), has_source)) throw InvalidPivot(what);
  for (auto& t : pair_preserving_permutations(f.field(), f.ell())) {
    MinorFunction g = apply_transform(f, t);
    if (!g.coeff(target).is_zero()) return {std::move(g), std::move(t)};
  }
  throw InvalidPivot(what);
}

}  // namespace

NormalizedFunction move_principal_to_123(const MinorFunction& f) {
  if (f.ell() != 3 || f.m() != 6) throw DimensionMismatch("move_principal_to_123 is defined for l=3, m=6");
  return normalize(
      f, ColumnSet{1, 2, 3}, [](const ColumnSet& a) { return istar(a, 3, 6) == a; },
      "support contains no self-paired column set");
}

NormalizedFunction move_nonprincipal_to_125(const MinorFunction& f) {
  if (f.ell() != 3 || f.m() != 6) throw DimensionMismatch("move_nonprincipal_to_125 is defined for l=3, m=6");
  return normalize(
      f, ColumnSet{1, 2, 5}, [](const ColumnSet& a) { return istar(a, 3, 6) != a; },
      "support contains no non-self-paired column set");
}

}  // namespace ogc::grassmann
