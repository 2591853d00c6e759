#pragma once

// The totally singular 3-spaces of the hyperbolic quadric
// x1 x6 + x2 x5 + x3 x4 = 0 in F_q^6, listed through the eight pivot cells
// of right-to-left reduced representatives.

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ogc/gf.hpp"
#include "ogc/grassmann.hpp"
#include "ogc/matrix.hpp"

namespace ogc::polar {

inline constexpr std::size_t kCellCount = 8;

struct PivotCell {
  std::string_view id;  // e.g. "456"
  int arity;            // number of free parameters
};

/// Frozen cell order: 456, 356, 246, 236, 145, 135, 124, 123.
const std::array<PivotCell, kCellCount>& cells();
grassmann::ColumnSet cell_pivots(std::size_t cell);
/// Index of the cell with the given pivot set; throws InvalidPivot.
std::size_t cell_index(const grassmann::ColumnSet& pivots);

/// The cell's parametrized representative; `params` has exactly `arity`
/// entries.  The non-pivot 3x3 block is skew-symmetric with zero diagonal.
Matrix build_cell(const gf::FieldPtr& field, std::size_t cell, std::span<const gf::Elem> params);

struct Point {
  std::size_t cell;
  std::vector<gf::Elem> params;
  Matrix matrix;
};

class PointList {
 public:
  PointList(gf::FieldPtr field, std::vector<Point> points);

  const gf::FieldPtr& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Half-open index range [first, second) of the cell's points.
  std::pair<std::size_t, std::size_t> cell_range(std::size_t cell) const { return ranges_[cell]; }

 private:
  gf::FieldPtr field_;
  std::vector<Point> points_;
  std::array<std::pair<std::size_t, std::size_t>, kCellCount> ranges_{};
};

/// 2(q^3 + q^2 + q + 1) points: cells in frozen order, parameters
/// lexicographic in element encodings (first parameter most significant).
PointList enumerate_points(const gf::FieldPtr& field);

/// Expected |O_{3,6}|.
std::size_t point_count(std::uint64_t q);

/// All rank-3 right-to-left reduced 3x6 matrices that are totally singular,
/// by direct enumeration.  Guarded to q <= 4 unless `override_guard`.
std::vector<Matrix> brute_force_points(const gf::FieldPtr& field, bool override_guard = false);

struct Swap34Map {
  std::size_t from_cell;
  std::size_t to_cell;
  /// mapping[i] = index within `to_cell` of the image of point i of `from_cell`.
  std::vector<std::size_t> mapping;
  bool bijective;
};

/// For each cell with 4 among its pivots, swap columns 3 and 4 of every
/// representative, reduce, and locate the result in the cell with 3 in
/// place of 4.  Throws InvalidPivot if an image lands in another cell.
std::vector<Swap34Map> swap34_bijection(const PointList& points);

}  // namespace ogc::polar
