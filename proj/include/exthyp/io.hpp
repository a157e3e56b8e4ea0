#pragma once

// JSON and CSV forms of vectors, complex values and reports, plus parsers for
// the command-line literal formats.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "exthyp/branch.hpp"
#include "exthyp/distance.hpp"
#include "exthyp/lorentz.hpp"
#include "exthyp/triangle.hpp"

namespace exthyp {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "exthyp/1";

inline Json to_json(const MinkowskiVector& x) { return Json(x.to_vector()); }

// Adding 0.0 folds -0.0 into 0.0.
inline Json to_json(Complex z) { return Json{{"re", z.real() + 0.0}, {"im", z.imag() + 0.0}}; }

inline Json to_json(const ExtDistance& d) { return d.infinite ? Json("inf") : to_json(d.value); }

inline Json to_json(const LawReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"name", e.name}};
    if (e.skipped) j["skipped"] = true;
    else j["residual"] = e.residual;
    entries.push_back(std::move(j));
  }
  return Json{{"stratum", r.stratum}, {"max_residual", r.max_residual()}, {"entries", std::move(entries)}};
}

inline Json to_json(const ExtTriangle& t) {
  Json j;
  j["vertices"] = Json::array({to_json(t.v[0]), to_json(t.v[1]), to_json(t.v[2])});
  j["duals"] = Json::array({to_json(t.w[0]), to_json(t.w[1]), to_json(t.w[2])});
  j["sides"] = Json{{"a", to_json(t.sides[0])}, {"b", to_json(t.sides[1])}, {"c", to_json(t.sides[2])}};
  j["side_cases"] = Json::array({to_string(t.sides[0].kase), to_string(t.sides[1].kase), to_string(t.sides[2].kase)});
  j["angles"] = Json{{"A", to_json(t.angles[0])}, {"B", to_json(t.angles[1])}, {"C", to_json(t.angles[2])}};
  j["stratum"] = t.stratum.name();
  j["ideal"] = t.ideal;
  return j;
}

/// A document with the schema tag first.
inline Json document() { return Json{{"schema", kSchema}}; }

/// One CSV row (suite, case, residual, tolerance, pass).
inline std::string csv_row(const std::string& suite, const std::string& kase, double residual, double tol,
                           bool pass) {
  auto q = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  };
  char num[64];
  std::snprintf(num, sizeof num, "%.17g,%.17g", residual, tol);
  return q(suite) + "," + q(kase) + "," + num + "," + (pass ? "true" : "false");
}

inline constexpr const char* kCsvHeader = "suite,case,residual,tolerance,pass";

// ---------------------------------------------------------------------------
// Parsing

namespace detail {
inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline double parse_real(const std::string& s) {
  const std::string t = trim(s);
  if (t == "inf" || t == "+inf" || t == "infinity") return INFINITY;
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + s + "'");
  }
  if (pos != t.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}
}  // namespace detail

/// "x0,x1,...,xn" (whitespace allowed) to a vector.
inline MinkowskiVector parse_vector(const std::string& s) {
  std::vector<double> xs;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) xs.push_back(detail::parse_real(item));
  if (!s.empty() && s.back() == ',') throw std::invalid_argument("trailing comma in vector '" + s + "'");
  if (xs.size() < 2) throw std::invalid_argument("vector needs at least 2 comma-separated coordinates: '" + s + "'");
  for (double x : xs)
    if (!std::isfinite(x)) throw std::invalid_argument("vector coordinates must be finite: '" + s + "'");
  return MinkowskiVector(std::span<const double>(xs));
}

/// Complex literal: "1.5", "2i", "-i", "1.5+0.5i", "1e-3-2.5e1i".
inline Complex parse_complex(const std::string& raw) {
  const std::string s = detail::trim(raw);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {detail::parse_real(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not the leading one and not an exponent sign.
  std::optional<std::size_t> split;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return detail::parse_real(t);
  };
  if (!split) return {0.0, imag_part(body)};
  return {detail::parse_real(body.substr(0, *split)), imag_part(body.substr(*split))};
}

}  // namespace exthyp
