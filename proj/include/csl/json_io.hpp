#pragma once

// JSON wire formats. Rationals travel as canonical strings "p/q" (with
// "/1" suppressed), big integers as numbers when they fit in 53 bits and
// as strings otherwise, factorizations as {"unit_exp": k, "factors":
// {"5": 1, "13": -1}}. Parsing failures surface as ParseError.

#include <json.hpp>

#include <string>

#include "csl/eta.hpp"
#include "csl/gaussian.hpp"
#include "csl/lattice.hpp"
#include "csl/soc_sos.hpp"

namespace csl {

using json = nlohmann::json;

inline json parse_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "malformed JSON input");
  return j;
}

inline json int_to_json(const Int& v) {
  static const Int kSafe = Int(1) << 53;
  if (abs_int(v) <= kSafe) return json(v.convert_to<long long>());
  return json(v.str());
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  fail(errc::parse_error, "expected an integer");
}

inline json rational_to_json(const Rational& q) { return json(format_rational(q)); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(errc::parse_error, "expected a rational as \"p/q\" string");
}

inline json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
    fail(errc::parse_error, "expected a matrix as an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j[0].size());
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      fail(errc::parse_error, "ragged matrix rows");
    for (int c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
  }
  return m;
}

inline json lattice_to_json(const Lattice& l) {
  return json{{"dim", l.dim()}, {"gram", matrix_to_json(l.gram())}};
}

inline Lattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gram"))
    fail(errc::parse_error, "lattice JSON must be {\"dim\": d, \"gram\": [[..]]}");
  RatMatrix gram = matrix_from_json(j.at("gram"));
  if (j.contains("dim") &&
      (!j.at("dim").is_number_integer() || j.at("dim").get<int>() != gram.rows()))
    fail(errc::parse_error, "dim field disagrees with the Gram matrix");
  return make_lattice(gram);
}

inline json simmap_to_json(const SimilarityMap& s) {
  return json{{"T", matrix_to_json(s.transform())},
              {"lattice", lattice_to_json(s.lattice())}};
}

inline SimilarityMap simmap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("T") || !j.contains("lattice"))
    fail(errc::parse_error, "map JSON must be {\"T\": [[..]], \"lattice\": {..}}");
  Lattice l = lattice_from_json(j.at("lattice"));
  return validate_similarity(l, matrix_from_json(j.at("T")));
}

inline json gauss_int_to_json(const GaussInt& z) {
  return json{{"re", z.re.str()}, {"im", z.im.str()}};
}

inline GaussInt gauss_int_from_json(const json& j) {
  if (j.is_string()) return parse_gauss_int(j.get<std::string>());
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    fail(errc::parse_error, "Gaussian integer JSON must be {\"re\": .., \"im\": ..}");
  return {int_from_json(j.at("re")), int_from_json(j.at("im"))};
}

namespace json_detail {

inline json exponent_map_to_json(const std::map<Int, long>& factors) {
  json out = json::object();
  for (const auto& [p, n] : factors) out[p.str()] = n;
  return out;
}

inline std::map<Int, long> exponent_map_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse_error, "factors must be an object");
  std::map<Int, long> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Int p = parse_int(it.key());
    if (p % 4 != 1 || !is_prime(p))
      fail(errc::parse_error, "factor key " + p.str() + " is not a split prime");
    if (!it.value().is_number_integer() || it.value().get<long>() == 0)
      fail(errc::parse_error, "factor exponents must be nonzero integers");
    out[p] = it.value().get<long>();
  }
  return out;
}

}  // namespace json_detail

inline json soc_to_json(const SocFactorization& f) {
  return json{{"unit_exp", f.unit_exp},
              {"factors", json_detail::exponent_map_to_json(f.factors)}};
}

inline SocFactorization soc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("unit_exp") || !j.contains("factors"))
    fail(errc::parse_error, "expected {\"unit_exp\": k, \"factors\": {..}}");
  if (!j.at("unit_exp").is_number_integer())
    fail(errc::parse_error, "unit_exp must be an integer");
  int k = j.at("unit_exp").get<int>();
  if (k < 0 || k > 3) fail(errc::parse_error, "unit_exp must lie in 0..3");
  return {k, json_detail::exponent_map_from_json(j.at("factors"))};
}

inline json sos_to_json(const SosFactorization& f) {
  return json{{"eighth_exp", f.eighth_exp},
              {"factors", json_detail::exponent_map_to_json(f.factors)}};
}

inline SosFactorization sos_from_json(const json& j) {
  if (!j.is_object() || !j.contains("eighth_exp") || !j.contains("factors"))
    fail(errc::parse_error, "expected {\"eighth_exp\": k, \"factors\": {..}}");
  if (!j.at("eighth_exp").is_number_integer())
    fail(errc::parse_error, "eighth_exp must be an integer");
  int k = j.at("eighth_exp").get<int>();
  if (k < 0 || k > 7) fail(errc::parse_error, "eighth_exp must lie in 0..7");
  return {k, json_detail::exponent_map_from_json(j.at("factors"))};
}

inline json sigma_to_json(const SigmaPair& s) {
  return json::array({int_to_json(s.sigma1), int_to_json(s.sigma2)});
}

inline json eta_to_json(const EtaClass& c) { return json{{"class", int_to_json(c.value)}}; }

}  // namespace csl
