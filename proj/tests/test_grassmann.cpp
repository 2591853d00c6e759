#include <doctest.h>

#include <random>

#include "ogc/error.hpp"
#include "ogc/forms.hpp"
#include "ogc/grassmann.hpp"
#include "ogc/polar.hpp"
#include "oracle.hpp"

using namespace ogc;
using namespace ogc::grassmann;
using gf::Elem;

namespace {

Matrix p456(const gf::FieldPtr& f, std::uint32_t a2, std::uint32_t a3, std::uint32_t a5) {
  const std::vector<Elem> params{Elem{a2}, Elem{a3}, Elem{a5}};
  return polar::build_cell(f, 0, params);
}

gf::Elem evaluate_oracle(const MinorFunction& f, const Matrix& m) {
  const auto& field = *f.field();
  Elem acc{0};
  const auto& sets = column_sets(3, 6);
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (!f.coeff(i).is_zero()) acc = field.add(acc, field.mul(f.coeff(i), oracle::minor_gauss(m, sets[i].values())));
  return acc;
}

MinorFunction random_function(const gf::FieldPtr& f, std::mt19937_64& rng) {
  MinorFunction g(f);
  for (std::size_t i = 0; i < g.size(); ++i) g.set(i, oracle::random_elem(*f, rng));
  return g;
}

ColumnTransform random_paired(const gf::FieldPtr& f, std::mt19937_64& rng) {
  while (true) {
    const int i = 1 + static_cast<int>(rng() % 6), j = 1 + static_cast<int>(rng() % 6);
    if (i == j || i == 7 - j) continue;
    Elem a = oracle::random_elem(*f, rng);
    if (a.is_zero()) a = f->one();
    return paired_column_operation(f, i, j, a);
  }
}

ColumnTransform random_mirrored(const gf::FieldPtr& f, std::mt19937_64& rng) {
  std::vector<int> eta{1, 2, 3};
  std::shuffle(eta.begin(), eta.end(), rng);
  return mirrored_permutation(f, eta);
}

ColumnTransform random_transform(const gf::FieldPtr& f, std::mt19937_64& rng) {
  ColumnTransform t = ColumnTransform::identity(f);
  const int steps = 1 + static_cast<int>(rng() % 4);
  for (int s = 0; s < steps; ++s) t = t * (rng() % 3 ? random_paired(f, rng) : random_mirrored(f, rng));
  return t;
}

std::vector<std::uint32_t> cell_order_qs() { return {2, 3, 4}; }

}  // namespace

TEST_CASE("column sets") {
  const auto& sets = column_sets(3, 6);
  REQUIRE(sets.size() == 20);
  CHECK(sets.front().to_string() == "123");
  CHECK(sets[1].to_string() == "124");
  CHECK(sets.back().to_string() == "456");
  for (std::size_t i = 0; i < sets.size(); ++i) CHECK(column_set_index(sets[i], 6) == i);
  CHECK(ColumnSet::parse("236") == ColumnSet{2, 3, 6});
  CHECK_THROWS(ColumnSet::parse("2x6"));
}

TEST_CASE("right-to-left reduction") {
  auto f = gf::Field::of_order(3);
  const Matrix m = p456(f, 1, 2, 1);
  auto r = rref_right_to_left(m);
  CHECK(r.canonical == m);
  CHECK(r.pivots == ColumnSet{4, 5, 6});

  auto left = rref_right_to_left(Matrix::from_ints(f, 3, 6, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}));
  CHECK(left.pivots == ColumnSet{1, 2, 3});
  CHECK(left.canonical == polar::build_cell(f, 7, {}));

  CHECK_THROWS_AS(rref_right_to_left(Matrix(f, 3, 6)), RankDeficient);

  std::mt19937_64 rng(17);
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 9u}) {
    auto fq = gf::Field::of_order(q);
    const std::size_t cell = polar::cell_index(ColumnSet{2, 4, 6});
    for (int t = 0; t < 50; ++t) {
      const std::vector<Elem> params{oracle::random_elem(*fq, rng), oracle::random_elem(*fq, rng)};
      const Matrix orig = polar::build_cell(fq, cell, params);
      Matrix mix(fq, 3, 3);
      do {
        for (std::size_t i = 0; i < 3; ++i)
          for (std::size_t j = 0; j < 3; ++j) mix(i, j) = oracle::random_elem(*fq, rng);
      } while (!mix.is_invertible());
      const auto red = rref_right_to_left(mix * orig);
      REQUIRE(red.canonical == orig);
      REQUIRE(red.pivots == ColumnSet{2, 4, 6});
    }
  }
}

TEST_CASE("minors on the big cell") {
  for (std::uint32_t q : {3u, 5u, 7u}) {
    auto f = gf::Field::of_order(q);
    for (std::uint32_t a2 = 0; a2 < q; ++a2)
      for (std::uint32_t a3 = 0; a3 < q; ++a3)
        for (std::uint32_t a5 = 0; a5 < q; ++a5) {
          const Matrix m = p456(f, a2, a3, a5);
          // the pivot block is an anti-identity, whose determinant is -1
          REQUIRE(minor(m, {4, 5, 6}) == f->from_int(-1));
          REQUIRE(minor(m, {2, 3, 6}) == f->mul(Elem{a5}, Elem{a5}));
          REQUIRE(minor(m, {1, 2, 5}) == f->neg(f->mul(Elem{a2}, Elem{a3})));
        }
  }
}

TEST_CASE("evaluate and support") {
  auto f3 = gf::Field::of_order(3);
  const auto diff = MinorFunction::from_terms(f3, {{"236", 1}, {"456", -1}});
  const auto sum = MinorFunction::from_terms(f3, {{"236", 1}, {"456", 1}});
  CHECK(evaluate(diff, p456(f3, 0, 0, 1)) == Elem{2});
  CHECK(evaluate(sum, p456(f3, 0, 0, 1)) == Elem{0});
  CHECK(evaluate(sum, p456(f3, 2, 1, 2)) == Elem{0});
  CHECK(evaluate(MinorFunction(f3), p456(f3, 1, 1, 1)) == Elem{0});
  CHECK(support(diff) == std::vector<ColumnSet>{ColumnSet{2, 3, 6}, ColumnSet{4, 5, 6}});
  CHECK(support(MinorFunction(f3)).empty());
  CHECK(support(MinorFunction::from_terms(f3, {{"123", 3}})).empty());

  std::mt19937_64 rng(23);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = gf::Field::of_order(q);
    const auto pts = polar::enumerate_points(f);
    for (int t = 0; t < 20; ++t) {
      const auto g = random_function(f, rng);
      for (const auto& pt : pts) REQUIRE(evaluate(g, pt.matrix) == evaluate_oracle(g, pt.matrix));
    }
  }
}

TEST_CASE("istar, rc_sets and principal minors") {
  CHECK(istar({4, 5, 6}, 3, 6) == ColumnSet{4, 5, 6});
  CHECK(istar({1, 2, 5}, 3, 6) == ColumnSet{1, 3, 4});
  CHECK(istar({1, 2, 3}, 3, 6) == ColumnSet{1, 2, 3});
  for (const auto& a : column_sets(3, 6)) CHECK(istar(istar(a, 3, 6), 3, 6) == a);

  const ColumnSet i456{4, 5, 6};
  auto same = rc_sets(i456, i456, 3);
  CHECK(same.rows.empty());
  CHECK(same.cols.empty());
  auto full = rc_sets({1, 2, 3}, i456, 3);
  CHECK(full.rows == std::vector<int>{1, 2, 3});
  CHECK(full.cols == std::vector<int>{1, 2, 3});
  CHECK(is_principal({2, 3, 6}, i456, 3));
  CHECK_FALSE(is_principal({1, 2, 5}, i456, 3));
  CHECK(is_principal(i456, i456, 3));
  CHECK_THROWS_AS(rc_sets({1, 2, 3}, {1, 2, 6}, 3), InvalidPivot);

  // det_236 on P_456 is a square exactly when the reduced sets coincide
  auto rc = rc_sets({2, 3, 6}, i456, 3);
  CHECK(rc.rows == rc.cols);
}

TEST_CASE("reduced index sets swap under A -> A*") {
  std::size_t checked = 0;
  for (std::size_t c = 0; c < polar::kCellCount; ++c) {
    const auto piv = polar::cell_pivots(c);
    for (const auto& a : column_sets(3, 6)) {
      const auto ra = rc_sets(a, piv, 3);
      const auto rb = rc_sets(istar(a, 3, 6), piv, 3);
      REQUIRE(ra.rows == rb.cols);
      REQUIRE(ra.cols == rb.rows);
      ++checked;
    }
  }
  CHECK(checked == 160);
}

TEST_CASE("expansion agrees with direct minors") {
  auto f3 = gf::Field::of_order(3);
  CHECK(expand_minor(p456(f3, 1, 2, 0), {4, 5, 6}) == minor(p456(f3, 1, 2, 0), {4, 5, 6}));
  CHECK(expand_minor(p456(f3, 1, 2, 2), {2, 3, 6}) == Elem{1});
  for (std::uint32_t q : cell_order_qs()) {
    auto f = gf::Field::of_order(q);
    std::size_t mismatches = 0;
    for (const auto& pt : polar::enumerate_points(f))
      for (const auto& a : column_sets(3, 6)) mismatches += expand_minor(pt.matrix, a) != oracle::minor_gauss(pt.matrix, a.values());
    CHECK_MESSAGE(mismatches == 0, "q=" << q);
  }
  CHECK_THROWS_AS(expand_minor(Matrix::from_ints(f3, 3, 6, {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0}), {1, 2, 3}),
                  InvalidPivot);
}

TEST_CASE("even characteristic self-pairing") {
  for (std::uint32_t q : {2u, 4u}) {
    auto f = gf::Field::of_order(q);
    std::size_t failures = 0;
    for (const auto& pt : polar::enumerate_points(f))
      for (const auto& a : column_sets(3, 6)) failures += minor(pt.matrix, a) != minor(pt.matrix, istar(a, 3, 6));
    CHECK(failures == 0);
  }
  // and it genuinely fails in odd characteristic
  auto f3 = gf::Field::of_order(3);
  std::size_t differ = 0;
  for (const auto& pt : polar::enumerate_points(f3))
    for (const auto& a : column_sets(3, 6)) differ += minor(pt.matrix, a) != minor(pt.matrix, istar(a, 3, 6));
  CHECK(differ > 0);
}

TEST_CASE("column transforms") {
  auto f3 = gf::Field::of_order(3);
  const auto id = ColumnTransform::identity(f3);
  std::mt19937_64 rng(29);
  const auto f = random_function(f3, rng);
  CHECK(apply_transform(f, id) == f);

  const std::vector<int> swap34{1, 2, 4, 3, 5, 6};
  const auto g = apply_transform(MinorFunction::single(f3, {1, 2, 3}), column_substitution(f3, swap34));
  CHECK(support(g) == std::vector<ColumnSet>{ColumnSet{1, 2, 4}});
  const Elem c = g.coeff(ColumnSet{1, 2, 4});
  CHECK((c == f3->one() || c == f3->from_int(-1)));

  CHECK(paired_column_operation(f3, 1, 2, Elem{0}) == id);
  CHECK_THROWS_AS(paired_column_operation(f3, 1, 6, Elem{1}), InvalidPair);
  CHECK_THROWS_AS(paired_column_operation(f3, 2, 2, Elem{1}), InvalidPair);
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j || i == 7 - j) continue;
      for (auto a : f3->elements())
        CHECK(paired_column_operation(f3, i, j, a) * paired_column_operation(f3, i, j, f3->neg(a)) == id);
    }

  const std::vector<int> ident{1, 2, 3};
  CHECK(mirrored_permutation(f3, ident) == id);
  const std::vector<int> swap12{2, 1, 3};
  const std::vector<int> expected{2, 1, 3, 4, 6, 5};
  CHECK(mirrored_permutation(f3, swap12) == column_substitution(f3, expected));
  CHECK(pair_preserving_permutations(f3).size() == 48);

  CHECK_THROWS_AS(ColumnTransform(Matrix(f3, 6, 6)), SingularTransform);
}

TEST_CASE("transforms preserve total singularity") {
  auto f3 = gf::Field::of_order(3);
  forms::FormSpace s3(f3, 3);
  const auto pts = polar::enumerate_points(f3);
  std::size_t failures = 0;
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      if (i == j || i == 7 - j) continue;
      for (auto a : f3->elements()) {
        const auto t = paired_column_operation(f3, i, j, a);
        for (const auto& pt : pts) failures += !s3.is_totally_singular(pt.matrix * t.matrix());
      }
    }
  CHECK(failures == 0);

  for (std::uint32_t q : {2u, 4u}) {
    auto f = gf::Field::of_order(q);
    forms::FormSpace s(f, 3);
    const auto ptsq = polar::enumerate_points(f);
    for (const auto& t : pair_preserving_permutations(f))
      for (const auto& pt : ptsq) REQUIRE(s.is_totally_singular(pt.matrix * t.matrix()));
  }
}

TEST_CASE("apply_transform matches pointwise evaluation") {
  std::mt19937_64 rng(31);
  for (std::uint32_t q : {2u, 3u}) {
    auto f = gf::Field::of_order(q);
    const auto pts = polar::enumerate_points(f);
    for (int t = 0; t < 25; ++t) {
      const auto fn = random_function(f, rng);
      const auto tr = random_transform(f, rng);
      const auto g = apply_transform(fn, tr);
      for (const auto& pt : pts) REQUIRE(evaluate(g, pt.matrix) == evaluate_oracle(fn, pt.matrix * tr.matrix()));
    }
  }
}

TEST_CASE("compound multiplicativity") {
  std::mt19937_64 rng(37);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = gf::Field::of_order(q);
    std::size_t failures = 0;
    for (int t = 0; t < 50; ++t) {
      const auto fn = random_function(f, rng);
      const auto t1 = random_transform(f, rng);
      const auto t2 = random_transform(f, rng);
      failures += apply_transform(apply_transform(fn, t1), t2) != apply_transform(fn, t2 * t1);
    }
    CHECK_MESSAGE(failures == 0, "q=" << q);
  }
}

TEST_CASE("support normalization") {
  std::mt19937_64 rng(41);
  for (std::uint32_t q : {2u, 3u}) {
    auto f = gf::Field::of_order(q);
    const auto pts = polar::enumerate_points(f);
    for (const auto& a : column_sets(3, 6)) {
      MinorFunction fn = random_function(f, rng);
      for (const auto& b : column_sets(3, 6))
        if (istar(b, 3, 6) == b && b != a) fn.set(b, Elem{0});
      if (fn.coeff(a).is_zero()) fn.set(a, f->one());
      if (istar(a, 3, 6) == a) {
        const auto n = move_principal_to_123(fn);
        CHECK(!n.g.coeff(ColumnSet{1, 2, 3}).is_zero());
        for (const auto& pt : pts) REQUIRE(evaluate(n.g, pt.matrix) == evaluate_oracle(fn, pt.matrix * n.transform.matrix()));
      } else {
        const auto n = move_nonprincipal_to_125(fn);
        CHECK(!n.g.coeff(ColumnSet{1, 2, 5}).is_zero());
      }
    }
    const auto no_principal = MinorFunction::from_terms(f, {{"125", 1}, {"134", 1}});
    CHECK_THROWS_AS(move_principal_to_123(no_principal), InvalidPivot);
  }
}
