#include "ogc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ogc/code.hpp"
#include "ogc/error.hpp"
#include "ogc/io.hpp"
#include "ogc/polar.hpp"

namespace ogc::cli {

namespace {

constexpr const char* kFooter = R"(Orderings (part of every output format):
  Column sets: the 20 three-element subsets of {1..6} in lexicographic
  order 123,124,125,126,134,...,456.  Coefficient files and generator rows
  use this order.
  Points: cells P456, P356, P246, P236, P145, P135, P124, P123 in that
  order; inside a cell the parameter tuples run lexicographically over the
  integer encodings of F_q (first parameter most significant).
  Field elements are integers in [0, q) whose base-p digits are polynomial
  coefficients, lowest degree first.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.)";

struct RunConfig {
  std::uint32_t q = 0;
  std::string poly;
  std::uint32_t max_q = 49;
  unsigned threads = 1;
  std::uint64_t budget = 100'000'000;
  std::string out_path;
  std::string format = "txt";
  std::string method = "exhaustive";
  std::string coeffs_path;
};

gf::FieldPtr make_field(const RunConfig& cfg) {
  if (!gf::prime_power(cfg.q)) throw InvalidField("invalid prime power q=" + std::to_string(cfg.q));
  if (cfg.q > cfg.max_q) throw InvalidField("q=" + std::to_string(cfg.q) + " exceeds --max-q " + std::to_string(cfg.max_q));
  if (cfg.poly.empty()) return gf::Field::of_order(cfg.q);
  std::vector<std::uint32_t> coeffs;
  std::stringstream ss(cfg.poly);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coeffs.push_back(static_cast<std::uint32_t>(std::stoul(item)));
    } catch (const std::exception&) {
      throw InvalidField("bad --poly coefficient '" + item + "'");
    }
  }
  return gf::Field::make(gf::make_spec(cfg.q, std::move(coeffs)));
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw ParseError("cannot open output file " + cfg.out_path);
  f << text;
}

void add_field_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--q", cfg.q, "Field order (prime power)")->required();
  sub->add_option("--poly", cfg.poly, "Irreducible polynomial c0,c1,...,ce (low to high, monic)");
  sub->add_option("--max-q", cfg.max_q, "Largest accepted field order")->capture_default_str();
}

code::SearchOptions search_options(const RunConfig& cfg) {
  code::SearchOptions o;
  o.budget = cfg.budget;
  o.threads = cfg.threads;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polar orthogonal Grassmann code C(O_{3,6}) toolkit", "ogc"};
  app.footer(kFooter);
  app.require_subcommand(1);
  RunConfig cfg;

  auto* points = app.add_subcommand("points", "List the points of O_{3,6} (one representative per subspace)");
  add_field_options(points, cfg);
  points->add_option("--format", cfg.format, "txt or json")->check(CLI::IsMember({"txt", "json"}))->capture_default_str();
  points->add_option("--out", cfg.out_path, "Output file (default stdout)");

  auto* genmat = app.add_subcommand("genmat", "Print the 20 x n generator matrix");
  add_field_options(genmat, cfg);
  genmat->add_option("--format", cfg.format, "txt or json")->check(CLI::IsMember({"txt", "json"}))->capture_default_str();
  genmat->add_option("--out", cfg.out_path, "Output file (default stdout)");

  auto* distance = app.add_subcommand("distance", "Minimum distance (exhaustive or witness upper bound)");
  add_field_options(distance, cfg);
  distance->add_option("--method", cfg.method, "exhaustive or witness")
      ->check(CLI::IsMember({"exhaustive", "witness"}))
      ->capture_default_str();
  distance->add_option("--budget", cfg.budget, "Maximum number of codewords q^k for exhaustive search")
      ->capture_default_str();
  distance->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

  auto* weights = app.add_subcommand("weights", "Weight report of one minor function");
  add_field_options(weights, cfg);
  weights->add_option("--coeffs", cfg.coeffs_path, "File with 20 coefficient encodings (JSON array or CSV line)")
      ->required();

  auto* wdist = app.add_subcommand("weight-dist", "Full weight distribution as CSV (weight,count)");
  add_field_options(wdist, cfg);
  wdist->add_option("--out", cfg.out_path, "Output CSV file (default stdout)");
  wdist->add_option("--budget", cfg.budget, "Maximum number of codewords q^k")->capture_default_str();
  wdist->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run all computational checks for this q");
  add_field_options(verify, cfg);
  verify->add_option("--budget", cfg.budget, "Maximum number of codewords q^k for the exhaustive distance check")
      ->capture_default_str();
  verify->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const gf::FieldPtr field = make_field(cfg);
    if (points->parsed()) {
      const auto pts = polar::enumerate_points(field);
      emit(cfg, cfg.format == "json" ? io::points_json(pts) : io::points_text(pts), out);
    } else if (genmat->parsed()) {
      const auto g = code::build_generator(polar::enumerate_points(field));
      emit(cfg, cfg.format == "json" ? io::generator_json(g) : io::generator_text(g), out);
    } else if (distance->parsed()) {
      const auto pts = polar::enumerate_points(field);
      const auto method = cfg.method == "witness" ? code::Method::witness : code::Method::exhaustive;
      const auto r = code::minimum_distance(pts, method, search_options(cfg));
      out << io::distance_json(r, field->q(), pts.size());
    } else if (weights->parsed()) {
      std::ifstream f(cfg.coeffs_path, std::ios::binary);
      if (!f) throw ParseError("cannot read coefficient file " + cfg.coeffs_path);
      std::stringstream buf;
      buf << f.rdbuf();
      const auto fn = io::parse_minor_function(field, buf.str());
      out << io::weight_report_json(code::weight(fn, polar::enumerate_points(field)));
    } else if (wdist->parsed()) {
      const auto d = code::weight_distribution(polar::enumerate_points(field), search_options(cfg));
      emit(cfg, io::weight_distribution_csv(d), out);
    } else if (verify->parsed()) {
      const auto report = code::verify_all(field, search_options(cfg));
      out << report.to_text();
      return report.all_pass() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ogc::cli
