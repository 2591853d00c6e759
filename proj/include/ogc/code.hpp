#pragma once

// The polar orthogonal Grassmann code C(O_{3,6}): generator matrix, weights,
// exhaustive minimum distance and weight distribution.

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ogc/gf.hpp"
#include "ogc/grassmann.hpp"
#include "ogc/kernels.hpp"
#include "ogc/matrix.hpp"
#include "ogc/polar.hpp"

namespace ogc::code {

using grassmann::MinorFunction;

/// 20 x n; row A holds det_A of every point in PointList order.
struct GeneratorMatrix {
  gf::FieldPtr field;
  Matrix rows;

  std::size_t n() const noexcept { return rows.cols(); }
};

GeneratorMatrix build_generator(const polar::PointList& points);

/// Rank over F_q (Gaussian elimination, columns left to right).
std::size_t rank_dimension(const GeneratorMatrix& g);

/// Greedy basis of the row space: generator rows that are independent of
/// the earlier ones, scanned in lexicographic column-set order.
std::vector<MinorFunction> row_basis(const GeneratorMatrix& g);

struct Codeword {
  std::vector<gf::Elem> values;
  MinorFunction source;
};

Codeword make_codeword(const MinorFunction& f, const GeneratorMatrix& g);

struct WeightReport {
  std::size_t total = 0;
  /// Indexed by polar::cells() order.
  std::array<std::size_t, polar::kCellCount> per_cell{};
};

WeightReport weight_of(std::span<const gf::Elem> values, const polar::PointList& points);
WeightReport weight(const MinorFunction& f, const polar::PointList& points, const GeneratorMatrix& g);
/// Convenience overload that builds the generator matrix.
WeightReport weight(const MinorFunction& f, const polar::PointList& points);

enum class Method { exhaustive, witness };

struct SearchOptions {
  /// Maximum number of codewords (q^k) an exhaustive run may cover.
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  /// Null selects kernels::best().
  const kernels::KernelSet* kernels = nullptr;
  /// Row-space basis to enumerate; empty selects row_basis().
  std::vector<MinorFunction> basis;
};

struct DistanceResult {
  Method method = Method::exhaustive;
  std::size_t d = 0;
  MinorFunction witness;
  /// Set for witness mode: d is the weight of a known codeword only.
  bool upper_bound_only = false;
  std::size_t k = 0;
  std::uint64_t codewords = 0;
  /// Coordinates of the witness in the enumerated basis (exhaustive only).
  std::vector<gf::Elem> message;
};

/// Exhaustive: minimum over all nonzero codewords, each projective class
/// visited once (message vectors with leading coordinate 1) in q-ary Gray
/// code order; ties go to the lexicographically smallest message.
/// Witness: the smallest weight among the known minimum-weight candidates.
/// Throws BudgetExceeded when q^k > options.budget in exhaustive mode.
DistanceResult minimum_distance(const polar::PointList& points, Method method, const SearchOptions& options = {});

struct WeightDistribution {
  std::size_t k = 0;
  std::map<std::size_t, std::uint64_t> counts;
  std::uint64_t total() const;
};

WeightDistribution weight_distribution(const polar::PointList& points, const SearchOptions& options = {});

/// q^k, saturating at UINT64_MAX.
std::uint64_t codeword_count(std::uint32_t q, std::size_t k);

/// d = q^3 - q^2 for odd q and q^3 for even q.
std::size_t expected_distance(std::uint32_t q);

/// det_456 for even q; det_236 + det_456 for odd q.  On P_456 the latter
/// evaluates to a_5^2 - 1 since det_456 = -1 there.
MinorFunction minimum_weight_witness(const gf::FieldPtr& field);
/// det_236 - det_456, the odd-characteristic witness as usually written.
MinorFunction written_odd_witness(const gf::FieldPtr& field);

struct CheckLine {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = true;
  /// Informational lines report a computed value and never fail.
  bool informational = false;
};

struct VerifyReport {
  std::uint32_t q = 0;
  std::vector<CheckLine> lines;

  bool all_pass() const;
  std::string to_text() const;
};

/// Runs every computational check available for this q.
VerifyReport verify_all(const gf::FieldPtr& field, const SearchOptions& options = {});

namespace detail {

struct SearchOutcome {
  std::size_t min_weight = 0;
  std::vector<gf::Elem> message;
  /// histogram[w] = number of projective classes of weight w.
  std::vector<std::uint64_t> histogram;
};

/// Enumerates all nonzero messages with leading coordinate 1 over the given
/// basis codewords (k rows of n values each).
SearchOutcome search(const gf::Field& field, const std::vector<std::vector<gf::Elem>>& basis_rows,
                     const SearchOptions& options, bool want_histogram);

}  // namespace detail

}  // namespace ogc::code
