#pragma once

// Text and JSON encodings used by the command-line tool.  Field elements are
// always written as their integer encodings; JSON objects have sorted keys.

#include <iosfwd>
#include <string>
#include <string_view>

#include "ogc/code.hpp"
#include "ogc/grassmann.hpp"
#include "ogc/polar.hpp"

namespace ogc::io {

/// Accepts a JSON array of 20 integers or one line of 20 comma-separated
/// integers, in lexicographic column-set order.  Throws ParseError.
grassmann::MinorFunction parse_minor_function(const gf::FieldPtr& field, std::string_view text);
std::string minor_function_json(const grassmann::MinorFunction& f);
std::string minor_function_text(const grassmann::MinorFunction& f);

std::string points_json(const polar::PointList& points);
std::string points_text(const polar::PointList& points);

/// 20 lines of n space-separated encodings.
std::string generator_text(const code::GeneratorMatrix& g);
std::string generator_json(const code::GeneratorMatrix& g);

std::string weight_report_json(const code::WeightReport& r);
std::string distance_json(const code::DistanceResult& r, std::uint32_t q, std::size_t n);
/// Header "weight,count" then one row per weight with a nonzero count.
std::string weight_distribution_csv(const code::WeightDistribution& d);

}  // namespace ogc::io
