#include <doctest.h>

#include <random>

#include "ogc/code.hpp"
#include "ogc/error.hpp"
#include "ogc/polar.hpp"
#include "oracle.hpp"

using namespace ogc;
using namespace ogc::code;
using gf::Elem;
using grassmann::ColumnSet;

namespace {

MinorFunction random_function(const gf::FieldPtr& f, std::mt19937_64& rng) {
  MinorFunction g(f);
  for (std::size_t i = 0; i < g.size(); ++i) g.set(i, oracle::random_elem(*f, rng));
  return g;
}

std::size_t nonzeros(const MinorFunction& fn, const polar::PointList& pts) {
  std::size_t w = 0;
  for (const auto& pt : pts) w += !grassmann::evaluate(fn, pt.matrix).is_zero();
  return w;
}

}  // namespace

TEST_CASE("generator matrix") {
  auto f2 = gf::Field::of_order(2);
  const auto pts = polar::enumerate_points(f2);
  const auto g = build_generator(pts);
  CHECK(g.rows.rows() == 20);
  CHECK(g.n() == 30);
  const std::size_t r456 = grassmann::column_set_index({4, 5, 6}, 6);
  const auto [lo, hi] = pts.cell_range(0);
  for (std::size_t i = 0; i < g.n(); ++i) CHECK(g.rows(r456, i) == (i >= lo && i < hi ? Elem{1} : Elem{0}));

  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = gf::Field::of_order(q);
    const auto p = polar::enumerate_points(f);
    const auto gq = build_generator(p);
    const auto& sets = grassmann::column_sets(3, 6);
    for (std::size_t a = 0; a < sets.size(); ++a) {
      const auto cw = make_codeword(MinorFunction::single(f, sets[a]), gq);
      for (std::size_t i = 0; i < gq.n(); ++i) REQUIRE(cw.values[i] == gq.rows(a, i));
      for (std::size_t i = 0; i < gq.n(); ++i) REQUIRE(gq.rows(a, i) == oracle::minor_gauss(p[i].matrix, sets[a].values()));
    }
  }
}

TEST_CASE("dimension") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    auto f = gf::Field::of_order(q);
    const auto g = build_generator(polar::enumerate_points(f));
    const std::size_t k = rank_dimension(g);
    CHECK(k == oracle::rank_reversed(g.rows));
    CHECK(row_basis(g).size() == k);
    if (q == 2) CHECK(k == 14);
  }
  auto f3 = gf::Field::of_order(3);
  CHECK(rank_dimension(GeneratorMatrix{f3, Matrix(f3, 20, 80)}) == 0);
}

TEST_CASE("witness weights") {
  for (std::uint32_t q : {3u, 5u, 7u, 9u}) {
    auto f = gf::Field::of_order(q);
    const auto pts = polar::enumerate_points(f);
    const auto w = weight(minimum_weight_witness(f), pts);
    CHECK(w.total == q * q * q - q * q);
    CHECK(w.per_cell[0] == (q - 2) * q * q);
    CHECK(w.per_cell[3] == q * q);
    CHECK(w.total == nonzeros(minimum_weight_witness(f), pts));
    // det_456 = -1 on P_456, so the difference vanishes only where a_5^2 = -1
    const auto lit = weight(written_odd_witness(f), pts);
    const bool minus_one_square = f->is_square(f->from_int(-1));
    CHECK(lit.per_cell[0] == (minus_one_square ? (q - 2) * q * q : q * q * q));
    CHECK(lit.per_cell[3] == q * q);
  }
  for (std::uint32_t q : {2u, 4u, 8u}) {
    auto f = gf::Field::of_order(q);
    const auto w = weight(minimum_weight_witness(f), polar::enumerate_points(f));
    CHECK(w.total == q * q * q);
    CHECK(w.per_cell[0] == q * q * q);
  }
  auto f3 = gf::Field::of_order(3);
  const auto zero = weight(MinorFunction(f3), polar::enumerate_points(f3));
  CHECK(zero.total == 0);
}

TEST_CASE("linearity of weights") {
  std::mt19937_64 rng(43);
  for (std::uint32_t q : {3u, 4u, 5u}) {
    auto f = gf::Field::of_order(q);
    const auto pts = polar::enumerate_points(f);
    const auto g = build_generator(pts);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_function(f, rng), b = random_function(f, rng);
      const Elem alpha = oracle::random_elem(*f, rng), beta = oracle::random_elem(*f, rng);
      const auto ca = make_codeword(a, g), cb = make_codeword(b, g);
      std::vector<Elem> combo(g.n());
      for (std::size_t i = 0; i < g.n(); ++i) combo[i] = f->add(f->mul(alpha, ca.values[i]), f->mul(beta, cb.values[i]));
      const auto direct = weight(a.scaled(alpha) + b.scaled(beta), pts, g);
      CHECK(direct.total == weight_of(combo, pts).total);
      CHECK(direct.per_cell == weight_of(combo, pts).per_cell);
    }
  }
}

TEST_CASE("weight invariance under automorphisms") {
  std::mt19937_64 rng(47);
  for (std::uint32_t q : {2u, 3u}) {
    auto f = gf::Field::of_order(q);
    const auto pts = polar::enumerate_points(f);
    for (int t = 0; t < 40; ++t) {
      const auto fn = random_function(f, rng);
      int i, j;
      do {
        i = 1 + static_cast<int>(rng() % 6);
        j = 1 + static_cast<int>(rng() % 6);
      } while (i == j || i == 7 - j);
      const auto tr = grassmann::paired_column_operation(f, i, j, oracle::random_elem(*f, rng));
      CHECK(nonzeros(grassmann::apply_transform(fn, tr), pts) == nonzeros(fn, pts));
    }
  }
}

TEST_CASE("exhaustive minimum distance") {
  auto f2 = gf::Field::of_order(2);
  const auto pts = polar::enumerate_points(f2);
  const auto r = minimum_distance(pts, Method::exhaustive);
  CHECK(r.d == 8);
  CHECK(r.k == 14);
  CHECK_FALSE(r.upper_bound_only);
  CHECK(weight(r.witness, pts).total == 8);

  // a different basis: the greedy basis scanned from the last column set
  const auto g = build_generator(pts);
  std::vector<MinorFunction> reversed;
  const auto& sets = grassmann::column_sets(3, 6);
  std::vector<std::vector<Elem>> kept;
  for (std::size_t a = sets.size(); a-- > 0;) {
    auto trial = kept;
    trial.emplace_back(g.rows.row(a).begin(), g.rows.row(a).end());
    Matrix m(f2, trial.size(), g.n());
    for (std::size_t r2 = 0; r2 < trial.size(); ++r2)
      for (std::size_t c = 0; c < g.n(); ++c) m(r2, c) = trial[r2][c];
    if (m.rank() == trial.size()) {
      kept = std::move(trial);
      // mix in an earlier row so the basis is not just single minors
      MinorFunction fn = MinorFunction::single(f2, sets[a]);
      if (!reversed.empty()) fn = fn + reversed.front();
      reversed.push_back(fn);
    }
  }
  REQUIRE(reversed.size() == 14);
  SearchOptions opts;
  opts.basis = reversed;
  CHECK(minimum_distance(pts, Method::exhaustive, opts).d == 8);

  for (std::uint32_t q : {4u, 5u}) {
    auto f = gf::Field::of_order(q);
    SearchOptions o;
    o.budget = 1000;
    CHECK_THROWS_AS(minimum_distance(polar::enumerate_points(f), Method::exhaustive, o), BudgetExceeded);
  }
}

TEST_CASE("threads and kernels do not change results") {
  auto f2 = gf::Field::of_order(2);
  const auto pts = polar::enumerate_points(f2);
  const auto base = weight_distribution(pts);
  const auto base_d = minimum_distance(pts, Method::exhaustive);
  for (const auto* ks : kernels::available()) {
    for (unsigned threads : {1u, 3u, 8u}) {
      SearchOptions o;
      o.threads = threads;
      o.kernels = ks;
      CHECK(weight_distribution(pts, o).counts == base.counts);
      const auto r = minimum_distance(pts, Method::exhaustive, o);
      CHECK(r.d == base_d.d);
      CHECK(r.message == base_d.message);
      CHECK(r.witness == base_d.witness);
    }
  }
}

TEST_CASE("witness mode") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    auto f = gf::Field::of_order(q);
    const auto r = minimum_distance(polar::enumerate_points(f), Method::witness);
    CHECK(r.upper_bound_only);
    CHECK(r.d == expected_distance(q));
  }
  CHECK(expected_distance(4) == 64);
  CHECK(codeword_count(3, 20) == 3486784401ull);
  CHECK(codeword_count(49, 20) == UINT64_MAX);
}

TEST_CASE("q=2 weight distribution against a direct recount") {
  auto f2 = gf::Field::of_order(2);
  const auto pts = polar::enumerate_points(f2);
  const auto d = weight_distribution(pts);
  CHECK(d.k == 14);
  CHECK(d.total() == 16384);
  CHECK(d.counts.at(0) == 1);
  CHECK(d.counts.begin()->first == 0);
  CHECK(std::next(d.counts.begin())->first == 8);

  // enumerate every message over the greedy basis with plain arithmetic
  const auto g = build_generator(pts);
  const auto basis = row_basis(g);
  std::vector<std::vector<Elem>> rows;
  for (const auto& b : basis) rows.push_back(make_codeword(b, g).values);
  std::map<std::size_t, std::uint64_t> recount;
  for (std::uint32_t msg = 0; msg < (1u << 14); ++msg) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < g.n(); ++i) {
      std::uint32_t v = 0;
      for (std::size_t r = 0; r < 14; ++r) v ^= ((msg >> r) & 1u) & rows[r][i].rep;
      w += v != 0;
    }
    ++recount[w];
  }
  CHECK(d.counts == recount);
}

TEST_CASE("q=3 search core on a subcode") {
  // k = 20 is too large for a direct recount, so run the search core on
  // the subcode spanned by the first 9 basis rows
  auto f3 = gf::Field::of_order(3);
  const auto pts = polar::enumerate_points(f3);
  const auto g = build_generator(pts);
  auto basis = row_basis(g);
  basis.resize(9);
  std::vector<std::vector<Elem>> rows;
  for (const auto& b : basis) rows.push_back(make_codeword(b, g).values);

  std::map<std::size_t, std::uint64_t> recount;
  for (std::uint32_t msg = 1; msg < 19683; ++msg) {
    std::vector<Elem> cw(g.n(), Elem{0});
    std::uint32_t t = msg;
    for (std::size_t r = 0; r < 9; ++r, t /= 3)
      for (std::size_t i = 0; i < g.n(); ++i) cw[i] = f3->add(cw[i], f3->mul(Elem{t % 3}, rows[r][i]));
    ++recount[weight_of(cw, pts).total];
  }
  for (const auto* ks : kernels::available()) {
    for (unsigned threads : {1u, 4u}) {
      SearchOptions o;
      o.threads = threads;
      o.kernels = ks;
      const auto out = detail::search(*f3, rows, o, true);
      std::map<std::size_t, std::uint64_t> scaled;
      for (std::size_t w = 0; w < out.histogram.size(); ++w)
        if (out.histogram[w]) scaled[w] = out.histogram[w] * 2;
      CHECK(scaled == recount);
      CHECK(out.min_weight == recount.begin()->first);
    }
  }
}
