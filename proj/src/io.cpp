#include "ogc/io.hpp"

#include <json.hpp>
#include <sstream>

#include "ogc/error.hpp"

namespace ogc::io {

using nlohmann::json;

namespace {

std::vector<long long> parse_integers(std::string_view text) {
  std::vector<long long> values;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty coefficient input");
  if (text[first] == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("malformed JSON coefficients: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("coefficients must be a JSON array");
    for (const auto& v : j) {
      if (!v.is_number_integer()) throw ParseError("coefficients must be integers");
      values.push_back(v.get<long long>());
    }
    return values;
  }
  std::string line(text);
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.pop_back();
  if (line.find('\n') != std::string::npos) throw ParseError("comma-separated coefficients must be on one line");
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + item + "'");
    }
    if (item.find_first_not_of(" \t", pos) != std::string::npos) throw ParseError("bad coefficient '" + item + "'");
    values.push_back(v);
  }
  return values;
}

}  // namespace

grassmann::MinorFunction parse_minor_function(const gf::FieldPtr& field, std::string_view text) {
  const auto values = parse_integers(text);
  const std::size_t expected = grassmann::column_sets(3, 6).size();
  if (values.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " coefficients, got " + std::to_string(values.size()));
  std::vector<gf::Elem> coeffs;
  for (long long v : values) {
    if (v < 0 || static_cast<unsigned long long>(v) >= field->q())
      throw ParseError("coefficient " + std::to_string(v) + " is not an encoding in [0, " + std::to_string(field->q()) +
                       ")");
    coeffs.push_back(gf::Elem{static_cast<std::uint32_t>(v)});
  }
  return grassmann::MinorFunction(field, std::move(coeffs));
}

std::string minor_function_json(const grassmann::MinorFunction& f) {
  json j = json::array();
  for (auto c : f.coeffs()) j.push_back(c.rep);
  return j.dump();
}

std::string minor_function_text(const grassmann::MinorFunction& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f.coeff(i).rep;
  return os.str();
}

std::string points_json(const polar::PointList& points) {
  json arr = json::array();
  for (const auto& pt : points) {
    json params = json::array();
    for (auto v : pt.params) params.push_back(v.rep);
    json grid = json::array();
    for (std::size_t r = 0; r < pt.matrix.rows(); ++r) {
      json row = json::array();
      for (auto v : pt.matrix.row(r)) row.push_back(v.rep);
      grid.push_back(std::move(row));
    }
    arr.push_back({{"cell", std::string(polar::cells()[pt.cell].id)}, {"matrix", std::move(grid)}, {"params", params}});
  }
  return arr.dump() + "\n";
}

std::string points_text(const polar::PointList& points) {
  std::ostringstream os;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& pt = points[i];
    os << "# " << i << " P" << polar::cells()[pt.cell].id << " params";
    for (auto v : pt.params) os << ' ' << v.rep;
    os << '\n' << pt.matrix.to_string() << '\n';
  }
  return os.str();
}

std::string generator_text(const code::GeneratorMatrix& g) { return g.rows.to_string(); }

std::string generator_json(const code::GeneratorMatrix& g) {
  json rows = json::array();
  for (std::size_t r = 0; r < g.rows.rows(); ++r) {
    json row = json::array();
    for (auto v : g.rows.row(r)) row.push_back(v.rep);
    rows.push_back(std::move(row));
  }
  json sets = json::array();
  for (const auto& a : grassmann::column_sets(3, 6)) sets.push_back(a.to_string());
  json j = {{"column_sets", sets}, {"n", g.n()}, {"q", g.field->q()}, {"rows", rows}};
  return j.dump() + "\n";
}

std::string weight_report_json(const code::WeightReport& r) {
  json cells = json::object();
  for (std::size_t c = 0; c < polar::kCellCount; ++c) cells[std::string(polar::cells()[c].id)] = r.per_cell[c];
  json j = {{"per_cell", cells}, {"total", r.total}};
  return j.dump() + "\n";
}

std::string distance_json(const code::DistanceResult& r, std::uint32_t q, std::size_t n) {
  json support = json::array();
  for (const auto& a : grassmann::support(r.witness)) support.push_back(a.to_string());
  json witness = json::array();
  for (auto c : r.witness.coeffs()) witness.push_back(c.rep);
  json j = {{"d", r.d},
            {"k", r.k},
            {"method", r.method == code::Method::exhaustive ? "exhaustive" : "witness"},
            {"n", n},
            {"q", q},
            {"upper_bound_only", r.upper_bound_only},
            {"witness", witness},
            {"witness_support", support}};
  return j.dump() + "\n";
}

std::string weight_distribution_csv(const code::WeightDistribution& d) {
  std::ostringstream os;
  os << "weight,count\n";
  for (const auto& [w, c] : d.counts) os << w << ',' << c << '\n';
  return os.str();
}

}  // namespace ogc::io
