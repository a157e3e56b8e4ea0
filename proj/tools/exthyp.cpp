// exthyp: command-line front end for the extended hyperbolic space library.
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "exthyp/exthyp.hpp"

namespace {

using exthyp::Json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double tolerance_or(double fallback) {
  const char* env = std::getenv("EXTHYP_TOL");
  if (env == nullptr || *env == '\0') return fallback;
  double tol = 0.0;
  try {
    tol = exthyp::detail::parse_real(env);
  } catch (const std::invalid_argument&) {
    throw UsageError("EXTHYP_TOL is not a number: " + std::string(env));
  }
  if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("EXTHYP_TOL must be a positive finite number");
  return tol;
}

double parse_bound(const std::string& s) {
  if (s == "inf" || s == "infinity") return exthyp::kInfinity;
  return exthyp::detail::parse_real(s);
}

exthyp::Model parse_model(const std::string& s) {
  if (s == "H") return exthyp::Model::HyperbolicSphere;
  if (s == "S") return exthyp::Model::SphericalSphere;
  throw UsageError("model must be H or S");
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json with_command(const std::string& command) {
  Json j = exthyp::document();
  j["command"] = command;
  return j;
}

int run_dist(const std::string& xs, const std::string& ys) {
  const exthyp::MinkowskiVector x = exthyp::parse_vector(xs), y = exthyp::parse_vector(ys);
  const exthyp::ExtDistance d = exthyp::extended_distance(x, y);
  Json j = with_command("dist");
  j["x"] = exthyp::to_json(x);
  j["y"] = exthyp::to_json(y);
  j["case"] = static_cast<int>(d.kase);
  j["case_name"] = exthyp::to_string(d.kase);
  j["d_H"] = exthyp::to_json(d);
  j["d_S"] = exthyp::to_json(exthyp::spherical_distance(x, y));
  emit(j);
  return kExitOk;
}

int run_angle(const std::string& vs, const std::string& ws) {
  const exthyp::MinkowskiVector v = exthyp::parse_vector(vs), w = exthyp::parse_vector(ws);
  Json j = with_command("angle");
  j["v"] = exthyp::to_json(v);
  j["w"] = exthyp::to_json(w);
  j["angle"] = exthyp::to_json(exthyp::angle_between(v, w));
  emit(j);
  return kExitOk;
}

int run_triangle(const std::vector<std::string>& vs, bool verify, bool ideal) {
  const exthyp::ExtTriangle t = exthyp::measure_triangle(exthyp::parse_vector(vs[0]), exthyp::parse_vector(vs[1]),
                                                         exthyp::parse_vector(vs[2]), {ideal});
  Json j = with_command("triangle");
  j["triangle"] = exthyp::to_json(t);
  int code = kExitOk;
  if (verify) {
    const double tol = tolerance_or(1e-8);
    const exthyp::LawReport r = exthyp::verify_all_laws(t);
    j["laws"] = exthyp::to_json(r);
    j["tolerance"] = tol;
    j["pass"] = r.within(tol);
    if (!r.within(tol)) code = kExitFail;
  }
  emit(j);
  return code;
}

int run_polygon(const std::string& family, int samples, std::uint64_t seed, bool csv) {
  exthyp::PolygonFamily f{};
  try {
    f = exthyp::parse_family(family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (samples < 1) throw UsageError("--samples must be at least 1");
  const double tol = tolerance_or(1e-8);
  const double shift_tol = 1e-9;
  const exthyp::PolygonReport r = exthyp::verify_family(f, samples, seed);
  const bool pass = r.pass(tol, shift_tol);
  const std::string suite = std::string("polygon ") + exthyp::to_string(f);

  if (csv) {
    std::cout << exthyp::kCsvHeader << "\n";
    for (const auto& [name, v] : r.identity_max) std::cout << exthyp::csv_row(suite, name, v, tol, v < tol) << "\n";
    std::cout << exthyp::csv_row(suite, "shift", r.shift_max, shift_tol, r.shift_max < shift_tol) << "\n";
    for (const auto& [name, m] : r.inequality_min) std::cout << exthyp::csv_row(suite, name, m, 0.0, m > 0.0) << "\n";
    return pass ? kExitOk : kExitFail;
  }

  Json j = with_command("polygon verify");
  j["family"] = exthyp::to_string(f);
  j["signature"] = exthyp::shift_signature(f);
  j["samples"] = r.samples;
  j["seed"] = seed;
  j["mirror_samples"] = r.mirror_samples;
  j["tolerance"] = tol;
  Json ids = Json::object();
  for (const auto& [name, v] : r.identity_max) ids[name] = v;
  j["identity_max"] = ids;
  j["shift_max"] = r.shift_max;
  Json ineq = Json::object();
  for (const auto& [name, m] : r.inequality_min) ineq[name] = m;
  j["inequality_min"] = ineq;
  j["pass"] = pass;
  emit(j);
  return pass ? kExitOk : kExitFail;
}

int run_contour_length(double b, std::optional<double> delta, const std::string& orientation) {
  if (!(b > 0.0) || !std::isfinite(b)) throw UsageError("--b must be a positive finite number");
  exthyp::ContourSpec spec{0.0, b, delta};
  try {
    spec.orientation = exthyp::parse_orientation(orientation);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const exthyp::Complex value =
      exthyp::integrate_contour([](exthyp::Complex z) { return 1.0 / (1.0 - z * z); }, spec);
  const exthyp::Complex closed = exthyp::length_1d(b);
  Json j = with_command("contour length");
  j["b"] = b;
  j["orientation"] = exthyp::to_string(spec.orientation);
  j["re"] = value.real();
  j["im"] = value.imag();
  j["closed_form"] = exthyp::to_json(closed);
  j["residual"] = std::abs(value - closed);
  emit(j);
  return kExitOk;
}

int run_contour_volume(int n, double b, std::optional<double> delta) {
  if (n < 1) throw UsageError("--n must be at least 1");
  if (!(b > 0.0)) throw UsageError("--b must be positive or inf");
  // Area of the unit (n-1)-sphere.
  const double sphere = 2.0 * std::pow(exthyp::kPi, n / 2.0) / std::tgamma(n / 2.0);
  const exthyp::Complex v = exthyp::volume_radial(exthyp::RadialProfile::constant(n, sphere), b, delta);
  Json j = with_command("contour volume");
  j["n"] = n;
  if (std::isinf(b)) j["b"] = "inf";
  else j["b"] = b;
  j["vol_H"] = exthyp::to_json(v);
  j["vol_S"] = exthyp::to_json(exthyp::spherical_from_hyperbolic(v, n));
  if (std::isinf(b)) j["total_vol_H"] = exthyp::to_json(2.0 * v);
  emit(j);
  return kExitOk;
}

int run_area(const std::vector<std::string>& sides, const std::string& model) {
  const exthyp::Model m = parse_model(model);
  std::array<exthyp::Complex, 3> s{};
  for (std::size_t k = 0; k < 3; ++k) s[k] = exthyp::parse_complex(sides[k]);
  Json j = with_command("area");
  j["model"] = exthyp::to_string(m);
  j["sides"] = Json::array({exthyp::to_json(s[0]), exthyp::to_json(s[1]), exthyp::to_json(s[2])});
  j["S1"] = exthyp::to_json(exthyp::area_cosine_law(s[0], s[1], s[2], m));
  j["S2"] = exthyp::to_json(exthyp::area_sides(s[0], s[1], s[2], m));
  emit(j);
  return kExitOk;
}

int run_suite(std::uint64_t seed, bool csv) {
  const std::vector<exthyp::CheckResult> results = exthyp::run_all({seed});
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass();

  if (csv) {
    std::cout << exthyp::kCsvHeader << "\n";
    for (const auto& r : results)
      for (const auto& c : r.cases) std::cout << exthyp::csv_row(r.id, c.name, c.residual, c.tolerance, c.pass()) << "\n";
  } else {
    Json j = with_command("suite all");
    j["seed"] = seed;
    Json checks = Json::array();
    for (const auto& r : results) checks.push_back(exthyp::to_json(r));
    j["checks"] = checks;
    j["pass"] = pass;
    emit(j);
  }
  for (const auto& r : results) std::cerr << exthyp::summary_line(r) << "\n";
  return pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended hyperbolic space: distances, triangles, polygons, contours and areas"};
  app.require_subcommand(1);

  std::string x, y;
  auto* dist = app.add_subcommand("dist", "extended distance d_H(x, y) with its case tag");
  dist->add_option("x", x, "vector x0,x1,...")->required();
  dist->add_option("y", y, "vector y0,y1,...")->required();

  auto* angle = app.add_subcommand("angle", "angle between two directions");
  angle->add_option("v", x, "vector")->required();
  angle->add_option("w", y, "vector")->required();

  std::vector<std::string> vertices;
  bool verify = false, ideal = false;
  auto* tri = app.add_subcommand("triangle", "sides, angles and dual of a triangle in R^{2,1}");
  tri->add_option("vertices", vertices, "three vectors")->required()->expected(3);
  tri->add_flag("--verify", verify, "check the trigonometric laws (tolerance 1e-8 or EXTHYP_TOL)");
  tri->add_flag("--ideal", ideal, "allow lightlike vertices");

  std::string family;
  int samples = 1000;
  std::uint64_t seed = 7;
  bool csv = false, json = false;
  auto* polygon = app.add_subcommand("polygon", "polygon identities");
  polygon->require_subcommand(1);
  auto* pverify = polygon->add_subcommand("verify", "verify one family over random samples");
  pverify->add_option("family", family, "LambertQuadH, RightHexagonH, OppositeRightQuadH, LambertQuadDS, RightPentagonDS")
      ->required();
  pverify->add_option("--samples", samples, "number of samples")->capture_default_str();
  pverify->add_option("--seed", seed, "random seed")->capture_default_str();
  auto* pcsv = pverify->add_flag("--csv", csv, "CSV residual table");
  pverify->add_flag("--json", json, "JSON report (default)")->excludes(pcsv);

  std::string bound = "2";
  std::optional<double> delta;
  std::string orientation = "clockwise";
  int dim = 2;
  auto* contour = app.add_subcommand("contour", "contour integrals across the light cone");
  contour->require_subcommand(1);
  auto* clength = contour->add_subcommand("length", "length of the segment from the centre to radius b");
  clength->add_option("--b", bound, "endpoint radius")->required();
  clength->add_option("--delta", delta, "detour radius");
  clength->add_option("--orientation", orientation, "clockwise")->capture_default_str();
  auto* cvolume = contour->add_subcommand("volume", "volume of the radius-b ball in dimension n");
  cvolume->add_option("--n", dim, "dimension")->capture_default_str();
  cvolume->add_option("--b", bound, "radius or inf")->required();
  cvolume->add_option("--delta", delta, "detour radius");

  std::vector<std::string> sides;
  std::string model = "H";
  auto* area = app.add_subcommand("area", "area of a triangle from its sides");
  area->add_option("--sides", sides, "three sides, real or re+imi")->required()->expected(3);
  area->add_option("--model", model, "H or S")->capture_default_str();

  auto* suite = app.add_subcommand("suite", "verification suites");
  suite->require_subcommand(1);
  auto* sall = suite->add_subcommand("all", "run every acceptance and property check");
  sall->add_option("--seed", seed, "random seed")->capture_default_str();
  auto* scsv = sall->add_flag("--csv", csv, "CSV residual table");
  sall->add_flag("--json", json, "JSON report (default)")->excludes(scsv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kExitUsage;
  }

  try {
    if (*dist) return run_dist(x, y);
    if (*angle) return run_angle(x, y);
    if (*tri) return run_triangle(vertices, verify, ideal);
    if (*pverify) return run_polygon(family, samples, seed, csv);
    if (*clength) return run_contour_length(parse_bound(bound), delta, orientation);
    if (*cvolume) return run_contour_volume(dim, parse_bound(bound), delta);
    if (*area) return run_area(sides, model);
    if (*sall) return run_suite(seed, csv);
  } catch (const exthyp::NotImplementedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  std::cerr << app.help();
  return kExitUsage;
}
