#include "ogc/code.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ogc/error.hpp"
#include "ogc/forms.hpp"

namespace ogc::code {

using grassmann::ColumnSet;

GeneratorMatrix build_generator(const polar::PointList& points) {
  const auto& sets = grassmann::column_sets(3, 6);
  GeneratorMatrix g{points.field(), Matrix(points.field(), sets.size(), points.size())};
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t i = 0; i < points.size(); ++i) g.rows(a, i) = grassmann::minor(points[i].matrix, sets[a]);
  return g;
}

std::size_t rank_dimension(const GeneratorMatrix& g) { return g.rows.rank(); }

std::vector<MinorFunction> row_basis(const GeneratorMatrix& g) {
  const auto& F = *g.field;
  const std::size_t n = g.n();
  const auto& sets = grassmann::column_sets(3, 6);
  // Echelon rows kept so far, each with its pivot column.
  std::vector<std::vector<gf::Elem>> echelon;
  std::vector<std::size_t> pivot_cols;
  std::vector<MinorFunction> basis;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    std::vector<gf::Elem> v(g.rows.row(a).begin(), g.rows.row(a).end());
    for (std::size_t r = 0; r < echelon.size(); ++r) {
      const gf::Elem f = v[pivot_cols[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] = F.sub(v[c], F.mul(f, echelon[r][c]));
    }
    auto it = std::find_if(v.begin(), v.end(), [](gf::Elem x) { return !x.is_zero(); });
    if (it == v.end()) continue;
    const std::size_t pc = static_cast<std::size_t>(it - v.begin());
    const gf::Elem s = F.inv(v[pc]);
    for (auto& x : v) x = F.mul(s, x);
    echelon.push_back(std::move(v));
    pivot_cols.push_back(pc);
    basis.push_back(MinorFunction::single(g.field, sets[a]));
  }
  return basis;
}

Codeword make_codeword(const MinorFunction& f, const GeneratorMatrix& g) {
  if (!f.field()->same_as(*g.field)) throw SpecMismatch("codeword: function and code over different fields");
  const auto& F = *g.field;
  std::vector<gf::Elem> values(g.n());
  for (std::size_t a = 0; a < f.size(); ++a) {
    const gf::Elem c = f.coeff(a);
    if (c.is_zero()) continue;
    const auto row = g.rows.row(a);
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = F.add(values[i], F.mul(c, row[i]));
  }
  return {std::move(values), f};
}

WeightReport weight_of(std::span<const gf::Elem> values, const polar::PointList& points) {
  if (values.size() != points.size()) throw DimensionMismatch("codeword length differs from point count");
  WeightReport r;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].is_zero()) continue;
    ++r.total;
    ++r.per_cell[points[i].cell];
  }
  return r;
}

WeightReport weight(const MinorFunction& f, const polar::PointList& points, const GeneratorMatrix& g) {
  return weight_of(make_codeword(f, g).values, points);
}

WeightReport weight(const MinorFunction& f, const polar::PointList& points) {
  return weight(f, points, build_generator(points));
}

std::uint64_t codeword_count(std::uint32_t q, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > UINT64_MAX / q) return UINT64_MAX;
    total *= q;
  }
  return total;
}

std::size_t expected_distance(std::uint32_t q) {
  const std::size_t q3 = static_cast<std::size_t>(q) * q * q;
  return q % 2 == 0 ? q3 : q3 - static_cast<std::size_t>(q) * q;
}

MinorFunction minimum_weight_witness(const gf::FieldPtr& field) {
  if (field->is_even()) return MinorFunction::from_terms(field, {{"456", 1}});
  return MinorFunction::from_terms(field, {{"236", 1}, {"456", 1}});
}

MinorFunction written_odd_witness(const gf::FieldPtr& field) {
  return MinorFunction::from_terms(field, {{"236", 1}, {"456", -1}});
}

namespace {

std::vector<std::vector<gf::Elem>> basis_codewords(const std::vector<MinorFunction>& basis, const GeneratorMatrix& g) {
  std::vector<std::vector<gf::Elem>> rows;
  rows.reserve(basis.size());
  for (const auto& f : basis) rows.push_back(make_codeword(f, g).values);
  return rows;
}

std::vector<MinorFunction> resolve_basis(const SearchOptions& options, const GeneratorMatrix& g, std::size_t k) {
  if (options.basis.empty()) return row_basis(g);
  std::vector<MinorFunction> basis = options.basis;
  Matrix m(g.field, basis.size(), g.n());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto cw = make_codeword(basis[j], g);
    std::copy(cw.values.begin(), cw.values.end(), m.row(j).begin());
  }
  if (basis.size() != k || m.rank() != k)
    throw DimensionMismatch("supplied basis does not span the code (need " + std::to_string(k) +
                            " independent codewords)");
  return basis;
}

void check_budget(std::uint32_t q, std::size_t k, std::uint64_t budget) {
  const std::uint64_t total = codeword_count(q, k);
  if (total > budget) {
    std::ostringstream os;
    os << "exhaustive search over q^k = " << q << "^" << k << " = "
       << (total == UINT64_MAX ? std::string("overflow") : std::to_string(total))
       << " codewords exceeds the budget of " << budget << "; raise --budget or use --method witness";
    throw BudgetExceeded(os.str());
  }
}

}  // namespace

DistanceResult minimum_distance(const polar::PointList& points, Method method, const SearchOptions& options) {
  const auto& field = points.field();
  const GeneratorMatrix g = build_generator(points);
  DistanceResult result;
  result.method = method;
  result.k = rank_dimension(g);

  if (method == Method::witness) {
    std::vector<MinorFunction> candidates{minimum_weight_witness(field)};
    if (!field->is_even()) candidates.push_back(written_odd_witness(field));
    result.d = SIZE_MAX;
    for (const auto& f : candidates) {
      const std::size_t w = weight(f, points, g).total;
      if (w < result.d) {
        result.d = w;
        result.witness = f;
      }
    }
    result.upper_bound_only = true;
    result.codewords = candidates.size();
    return result;
  }

  check_budget(field->q(), result.k, options.budget);
  const auto basis = resolve_basis(options, g, result.k);
  const auto outcome = detail::search(*field, basis_codewords(basis, g), options, false);
  result.d = outcome.min_weight;
  result.message = outcome.message;
  MinorFunction w(field);
  for (std::size_t j = 0; j < basis.size(); ++j) w = w + basis[j].scaled(outcome.message[j]);
  result.witness = std::move(w);
  result.codewords = codeword_count(field->q(), result.k);
  return result;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

WeightDistribution weight_distribution(const polar::PointList& points, const SearchOptions& options) {
  const auto& field = points.field();
  const GeneratorMatrix g = build_generator(points);
  WeightDistribution dist;
  dist.k = rank_dimension(g);
  check_budget(field->q(), dist.k, options.budget);
  const auto basis = resolve_basis(options, g, dist.k);
  const auto outcome = detail::search(*field, basis_codewords(basis, g), options, true);
  dist.counts[0] = 1;
  for (std::size_t w = 1; w < outcome.histogram.size(); ++w)
    if (outcome.histogram[w]) dist.counts[w] += outcome.histogram[w] * (field->q() - 1);
  return dist;
}

bool VerifyReport::all_pass() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.informational || l.pass; });
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "verification report for q=" << q << '\n';
  for (const auto& l : lines) {
    os << (l.informational ? "[INFO] " : l.pass ? "[PASS] " : "[FAIL] ") << l.name;
    if (!l.informational) os << ": expected " << l.expected << ", actual " << l.actual;
    else os << ": " << l.actual;
    os << '\n';
  }
  os << (all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
  return os.str();
}

namespace {

std::string profile_string(const WeightReport& r) {
  std::ostringstream os;
  os << r.total << " (";
  for (std::size_t c = 0; c < polar::kCellCount; ++c)
    os << (c ? " " : "") << "P" << polar::cells()[c].id << "=" << r.per_cell[c];
  os << ")";
  return os.str();
}

template <typename T>
CheckLine check(std::string name, const T& expected, const T& actual) {
  std::ostringstream e, a;
  e << expected;
  a << actual;
  return {std::move(name), e.str(), a.str(), expected == actual, false};
}

CheckLine info(std::string name, std::string value) { return {std::move(name), "", std::move(value), true, true}; }

}  // namespace

VerifyReport verify_all(const gf::FieldPtr& field, const SearchOptions& options) {
  const std::uint32_t q = field->q();
  VerifyReport rep;
  rep.q = q;
  auto& out = rep.lines;

  const auto points = polar::enumerate_points(field);
  const auto gen = build_generator(points);
  const forms::FormSpace space(field, 3);
  const auto& sets = grassmann::column_sets(3, 6);

  out.push_back(check<std::size_t>("point count 2(q^3+q^2+q+1)", polar::point_count(q), points.size()));

  {
    std::ostringstream e, a;
    const std::size_t sizes[] = {q * q * q, q * q * q, q * q, q * q, q, q, 1, 1};
    for (std::size_t c = 0; c < polar::kCellCount; ++c) {
      const auto [b, en] = points.cell_range(c);
      e << (c ? "," : "") << sizes[c];
      a << (c ? "," : "") << (en - b);
    }
    out.push_back(check("cell sizes", e.str(), a.str()));
  }

  {
    std::size_t bad = 0, excl = 0;
    std::set<std::vector<gf::Elem>> distinct;
    for (const auto& pt : points) {
      const auto rr = grassmann::rref_right_to_left(pt.matrix);
      if (!space.is_totally_singular(pt.matrix) || !(rr.canonical == pt.matrix) ||
          rr.pivots != polar::cell_pivots(pt.cell))
        ++bad;
      for (int i = 1; i <= 3; ++i)
        if (rr.pivots.contains(i) && rr.pivots.contains(7 - i)) ++excl;
      distinct.emplace(pt.matrix.data().begin(), pt.matrix.data().end());
    }
    out.push_back(check<std::size_t>("cell matrices totally singular and canonical (failures)", 0, bad));
    out.push_back(check<std::size_t>("pivot sets never contain both i and 7-i (violations)", 0, excl));
    out.push_back(check<std::size_t>("distinct representatives", points.size(), distinct.size()));
  }

  if (q <= 4) {
    const auto brute = polar::brute_force_points(field);
    std::set<std::vector<gf::Elem>> a, b;
    for (const auto& m : brute) a.emplace(m.data().begin(), m.data().end());
    for (const auto& pt : points) b.emplace(pt.matrix.data().begin(), pt.matrix.data().end());
    out.push_back(check<bool>("cell enumeration equals brute-force reduced-form oracle", true, a == b));
  }

  {
    std::size_t ok = 0;
    const auto maps = polar::swap34_bijection(points);
    for (const auto& m : maps) ok += m.bijective;
    out.push_back(check<std::size_t>("swap of columns 3,4 maps P_I onto P_I' bijectively (pairs)", 4, ok));
  }

  {
    std::size_t fails = 0;
    for (std::size_t i = 1; i <= 6; ++i)
      for (std::size_t j = 1; j <= 6; ++j) {
        if (i == j || i == 7 - j) continue;
        for (auto a : field->elements()) {
          const auto t = grassmann::paired_column_operation(field, static_cast<int>(i), static_cast<int>(j), a);
          for (const auto& pt : points)
            if (!space.is_totally_singular(pt.matrix * t.matrix())) ++fails;
        }
      }
    out.push_back(check<std::size_t>("paired column operations preserve total singularity (failures)", 0, fails));
  }

  {
    std::size_t mismatches = 0;
    for (const auto& pt : points)
      for (const auto& a : sets)
        if (grassmann::expand_minor(pt.matrix, a) != gen.rows(grassmann::column_set_index(a, 6), &pt - &points[0]))
          ++mismatches;
    out.push_back(check<std::size_t>("reduced-minor expansion equals direct minor (mismatches)", 0, mismatches));
  }

  {
    std::size_t fails = 0;
    for (std::size_t c = 0; c < polar::kCellCount; ++c) {
      const auto pivots = polar::cell_pivots(c);
      for (const auto& a : sets)
        if (grassmann::rc_sets(a, pivots, 3).rows != grassmann::rc_sets(grassmann::istar(a, 3, 6), pivots, 3).cols)
          ++fails;
    }
    out.push_back(check<std::size_t>("r_{A,I} = c_{A*,I} over 20 x 8 pairs (failures)", 0, fails));
  }

  if (field->is_even()) {
    std::size_t equal = 0, pairs = 0;
    for (std::size_t a = 0; a < sets.size(); ++a) {
      const std::size_t b = grassmann::column_set_index(grassmann::istar(sets[a], 3, 6), 6);
      if (b > a) ++pairs;
      bool same = true;
      for (std::size_t i = 0; i < gen.n(); ++i) same = same && gen.rows(a, i) == gen.rows(b, i);
      equal += same;
    }
    out.push_back(check<std::size_t>("even q: generator rows A and A* identical (column sets)", 20, equal));
    out.push_back(info("pairs {A, A*} with A != A*", std::to_string(pairs) + " (the other " +
                                                            std::to_string(20 - 2 * pairs) + " sets satisfy A = A*)"));
  }

  {
    std::size_t fails = 0;
    for (const auto& a : sets) {
      const auto f = MinorFunction::single(field, a);
      const std::size_t w = weight(f, points, gen).total;
      const bool principal = grassmann::istar(a, 3, 6) == a;
      const auto norm = principal ? grassmann::move_principal_to_123(f) : grassmann::move_nonprincipal_to_125(f);
      const ColumnSet target = principal ? ColumnSet{1, 2, 3} : ColumnSet{1, 2, 5};
      if (norm.g.coeff(target).is_zero() || weight(norm.g, points, gen).total != w) ++fails;
    }
    out.push_back(check<std::size_t>("support normalization to 123 / 125 keeps weight (failures)", 0, fails));
  }

  {
    std::set<std::uint32_t> values;
    const auto [b, e] = points.cell_range(0);
    const std::size_t idx456 = grassmann::column_set_index(ColumnSet{4, 5, 6}, 6);
    for (std::size_t i = b; i < e; ++i) values.insert(gen.rows(idx456, i).rep);
    std::ostringstream os;
    for (auto v : values) os << v << " ";
    out.push_back(info("det_456 values on P_456", os.str() + "(encoding; -1 = " +
                                                      std::to_string(field->neg(field->one()).rep) + ")"));
  }

  const std::size_t q2 = static_cast<std::size_t>(q) * q, q3 = q2 * q;
  if (!field->is_even()) {
    const auto wr = weight(minimum_weight_witness(field), points, gen);
    WeightReport exp;
    exp.per_cell[0] = (q - 2) * q2;
    exp.per_cell[3] = q2;
    exp.total = q3 - q2;
    out.push_back(check("odd q: weight of det_236 + det_456 with per-cell profile", profile_string(exp),
                        profile_string(wr)));
    out.push_back(info("odd q: weight of det_236 - det_456",
                       profile_string(weight(written_odd_witness(field), points, gen))));
  } else {
    const auto wr = weight(minimum_weight_witness(field), points, gen);
    WeightReport exp;
    exp.per_cell[0] = q3;
    exp.total = q3;
    out.push_back(check("even q: weight of det_456 with per-cell profile", profile_string(exp), profile_string(wr)));
  }

  const std::size_t k = rank_dimension(gen);
  const std::uint64_t total = codeword_count(q, k);
  if (total <= options.budget) {
    const auto dr = minimum_distance(points, Method::exhaustive, options);
    if (q == 2) {
      std::ostringstream a;
      a << "[" << points.size() << "," << k << "," << dr.d << "]";
      out.push_back(check<std::string>("q=2 parameters [n,k,d]", "[30,14,8]", a.str()));
    } else {
      out.push_back(info("dimension k", std::to_string(k)));
    }
    out.push_back(check<std::size_t>("exhaustive minimum distance", expected_distance(q), dr.d));
  } else {
    const auto dr = minimum_distance(points, Method::witness, options);
    out.push_back(info("dimension k", std::to_string(k)));
    out.push_back(info("exhaustive search skipped", "q^k = " + std::to_string(total) + " exceeds budget " +
                                                        std::to_string(options.budget)));
    out.push_back(check<std::size_t>("witness upper bound on minimum distance", expected_distance(q), dr.d));
  }
  return rep;
}

}  // namespace ogc::code
