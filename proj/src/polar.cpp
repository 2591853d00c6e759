#include "ogc/polar.hpp"

#include <algorithm>
#include <map>

#include "ogc/error.hpp"
#include "ogc/forms.hpp"

namespace ogc::polar {

using grassmann::ColumnSet;

const std::array<PivotCell, kCellCount>& cells() {
  static const std::array<PivotCell, kCellCount> table = {{
      {"456", 3},
      {"356", 3},
      {"246", 2},
      {"236", 2},
      {"145", 1},
      {"135", 1},
      {"124", 0},
      {"123", 0},
  }};
  return table;
}

ColumnSet cell_pivots(std::size_t cell) { return ColumnSet::parse(cells().at(cell).id); }

std::size_t cell_index(const ColumnSet& pivots) {
  const std::string id = pivots.to_string();
  for (std::size_t i = 0; i < kCellCount; ++i)
    if (cells()[i].id == id) return i;
  throw InvalidPivot("no cell with pivot set " + id);
}

Matrix build_cell(const gf::FieldPtr& field, std::size_t cell, std::span<const gf::Elem> params) {
  if (cell >= kCellCount) throw ArityError("cell index out of range");
  if (params.size() != static_cast<std::size_t>(cells()[cell].arity))
    throw ArityError("cell " + std::string(cells()[cell].id) + " takes " + std::to_string(cells()[cell].arity) +
                     " parameters, got " + std::to_string(params.size()));
  for (auto v : params) field->element(v.rep);
  const auto& F = *field;
  const gf::Elem O{0}, I{1};
  auto n = [&](gf::Elem x) { return F.neg(x); };
  auto make = [&](std::array<gf::Elem, 18> e) {
    Matrix m(field, 3, 6);
    for (std::size_t i = 0; i < 18; ++i) m(i / 6, i % 6) = e[i];
    return m;
  };
  switch (cell) {
    case 0: {  // 456
      const gf::Elem a2 = params[0], a3 = params[1], a5 = params[2];
      return make({O, a2, a3, O, O, I,  //
                   n(a2), O, a5, O, I, O,  //
                   n(a3), n(a5), O, I, O, O});
    }
    case 1: {  // 356
      const gf::Elem b2 = params[0], b3 = params[1], b5 = params[2];
      return make({O, b2, O, b3, O, I,  //
                   n(b2), O, O, b5, I, O,  //
                   n(b3), n(b5), I, O, O, O});
    }
    case 2: {  // 246
      const gf::Elem c2 = params[0], c3 = params[1];
      return make({O, O, c2, O, c3, I,  //
                   n(c2), O, O, I, O, O,  //
                   n(c3), I, O, O, O, O});
    }
    case 3: {  // 236
      const gf::Elem d2 = params[0], d3 = params[1];
      return make({O, O, O, d2, d3, I,  //
                   n(d2), O, I, O, O, O,  //
                   n(d3), I, O, O, O, O});
    }
    case 4: {  // 145
      const gf::Elem e2 = params[0];
      return make({O, O, e2, O, I, O,  //
                   O, n(e2), O, I, O, O,  //
                   I, O, O, O, O, O});
    }
    case 5: {  // 135
      const gf::Elem x2 = params[0];
      return make({O, O, O, x2, I, O,  //
                   O, n(x2), I, O, O, O,  //
                   I, O, O, O, O, O});
    }
    case 6:  // 124
      return make({O, O, O, I, O, O,  //
                   O, I, O, O, O, O,  //
                   I, O, O, O, O, O});
    default:  // 123
      return make({O, O, I, O, O, O,  //
                   O, I, O, O, O, O,  //
                   I, O, O, O, O, O});
  }
}

PointList::PointList(gf::FieldPtr field, std::vector<Point> points)
    : field_(std::move(field)), points_(std::move(points)) {
  for (auto& r : ranges_) r = {points_.size(), points_.size()};
  for (std::size_t i = 0; i < points_.size(); ++i) {
    auto& r = ranges_.at(points_[i].cell);
    if (r.first == points_.size()) r.first = i;
    r.second = i + 1;
  }
}

std::size_t point_count(std::uint64_t q) { return static_cast<std::size_t>(2 * (q * q * q + q * q + q + 1)); }

PointList enumerate_points(const gf::FieldPtr& field) {
  const std::uint32_t q = field->q();
  std::vector<Point> points;
  points.reserve(point_count(q));
  for (std::size_t cell = 0; cell < kCellCount; ++cell) {
    const std::size_t arity = static_cast<std::size_t>(cells()[cell].arity);
    std::vector<gf::Elem> params(arity);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < arity; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t k = arity; k-- > 0;) {
        params[k] = gf::Elem{static_cast<std::uint32_t>(v % q)};
        v /= q;
      }
      points.push_back({cell, params, build_cell(field, cell, params)});
    }
  }
  return PointList(field, std::move(points));
}

std::vector<Matrix> brute_force_points(const gf::FieldPtr& field, bool override_guard) {
  const std::uint32_t q = field->q();
  if (q > 4 && !override_guard)
    throw CostGuardExceeded("brute-force enumeration is limited to q <= 4 (q=" + std::to_string(q) + ")");
  const forms::FormSpace space(field, 3);
  std::vector<Matrix> out;
  for (const auto& set : grassmann::column_sets(3, 6)) {
    // Row k holds the k-th pivot from the right; its free entries are the
    // non-pivot columns left of that pivot.
    const int piv[3] = {set[2], set[1], set[0]};
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < 3; ++r)
      for (int c = 1; c < piv[r]; ++c)
        if (!set.contains(c)) free.emplace_back(r, c);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free.size(); ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Matrix m(field, 3, 6);
      for (int r = 0; r < 3; ++r) m(r, piv[r] - 1) = gf::Elem{1};
      std::uint64_t v = idx;
      for (const auto& [r, c] : free) {
        m(r, c - 1) = gf::Elem{static_cast<std::uint32_t>(v % q)};
        v /= q;
      }
      if (space.is_totally_singular(m)) out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<Swap34Map> swap34_bijection(const PointList& points) {
  std::vector<Swap34Map> out;
  for (std::size_t from = 0; from < kCellCount; ++from) {
    const ColumnSet pivots = cell_pivots(from);
    if (!pivots.contains(4)) continue;
    std::vector<int> target;
    for (int c : pivots) target.push_back(c == 4 ? 3 : c);
    std::sort(target.begin(), target.end());
    const std::size_t to = cell_index(ColumnSet(target));

    const auto [tb, te] = points.cell_range(to);
    std::map<std::vector<gf::Elem>, std::size_t> index;
    for (std::size_t i = tb; i < te; ++i) {
      auto d = points[i].matrix.data();
      index.emplace(std::vector<gf::Elem>(d.begin(), d.end()), i - tb);
    }

    Swap34Map map{from, to, {}, true};
    std::vector<bool> hit(te - tb, false);
    const auto [fb, fe] = points.cell_range(from);
    for (std::size_t i = fb; i < fe; ++i) {
      Matrix m = points[i].matrix;
      m.swap_columns(2, 3);
      const auto rr = grassmann::rref_right_to_left(m);
      if (rr.pivots != ColumnSet(target))
        throw InvalidPivot("swap 3<->4 sent a point of P_" + pivots.to_string() + " to P_" + rr.pivots.to_string());
      auto d = rr.canonical.data();
      auto it = index.find(std::vector<gf::Elem>(d.begin(), d.end()));
      if (it == index.end()) {
        map.bijective = false;
        map.mapping.push_back(te - tb);
        continue;
      }
      if (hit[it->second]) map.bijective = false;
      hit[it->second] = true;
      map.mapping.push_back(it->second);
    }
    if ((fe - fb) != (te - tb)) map.bijective = false;
    out.push_back(std::move(map));
  }
  return out;
}

}  // namespace ogc::polar
