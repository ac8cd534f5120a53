#pragma once

// JSON serialization: the instance format (the unit of caching and
// hashing, canonical by construction), cyclotomic integers with decimal
// string coefficients, polygons, and CSV emission for plotting.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "absum/ab_polynomial.hpp"
#include "absum/cyclotomic.hpp"
#include "absum/errors.hpp"
#include "absum/laurent.hpp"
#include "absum/numeric.hpp"
#include "absum/polygon.hpp"

namespace absum {

using Json = nlohmann::ordered_json;

inline Json field_element_to_json(const FieldElement& x) {
  Json a = Json::array();
  for (int64_t c : x.coeffs()) a.push_back(c);
  return a;
}

inline FieldElement field_element_from_json(const FieldPtr& f, const Json& j) {
  require(j.is_array(), errc::parse_error, "field element must be a coefficient array");
  Coeffs c;
  for (const auto& v : j) c.push_back(v.get<int64_t>());
  require(c.size() <= static_cast<size_t>(f->degree()), errc::parse_error,
          "field element has too many coefficients");
  return f->from_coeffs(std::move(c));
}

inline Json laurent_terms_to_json(const LaurentPoly& L) {
  Json out = Json::array();
  for (const auto& [e, c] : L.terms()) {  // exponent-lexicographic order
    Json exps = Json::array();
    for (int v : e) exps.push_back(v);
    out.push_back(Json::array({field_element_to_json(c), exps}));
  }
  return out;
}

inline LaurentPoly laurent_terms_from_json(const FieldPtr& f, int n_vars, const Json& j) {
  LaurentPoly L(f, n_vars);
  require(j.is_array(), errc::parse_error, "polynomial must be a term array");
  for (const auto& term : j) {
    require(term.is_array() && term.size() == 2, errc::parse_error, "term must be [coeff, exps]");
    Exponent e;
    for (const auto& v : term[1]) e.push_back(v.get<int>());
    require(e.size() == static_cast<size_t>(n_vars), errc::parse_error, "exponent arity mismatch");
    L.add_term(e, field_element_from_json(f, term[0]));
  }
  return L;
}

struct Instance {
  ABPolynomial poly;
  std::optional<uint64_t> seed;
};

inline Json instance_to_json(const ABPolynomial& G, std::optional<uint64_t> seed = std::nullopt) {
  Json j;
  j["p"] = G.field_ptr()->p();
  j["s"] = G.field_ptr()->degree();
  j["n"] = G.n();
  j["A"] = G.A();
  j["B"] = G.B();
  j["f"] = laurent_terms_to_json(G.f());
  j["g"] = laurent_terms_to_json(G.g());
  Json pb = Json::array();
  for (const auto& c : G.PB()) pb.push_back(field_element_to_json(c));
  j["PB"] = pb;
  if (seed) j["seed"] = *seed;
  return j;
}

inline Instance instance_from_json(const Json& j) {
  for (const char* key : {"p", "s", "n", "A", "B", "f", "g", "PB"})
    require(j.contains(key), errc::parse_error, std::string("instance missing field '") + key + "'");
  auto field = build_field(j["p"].get<int64_t>(), j["s"].get<int>());
  int n = j["n"].get<int>();
  auto f = laurent_terms_from_json(field, n, j["f"]);
  auto g = laurent_terms_from_json(field, n, j["g"]);
  std::vector<FieldElement> pb;
  for (const auto& c : j["PB"]) pb.push_back(field_element_from_json(field, c));
  int A = j["A"].get<int>(), B = j["B"].get<int>();
  Instance inst{ABPolynomial::assemble(std::move(f), std::move(g), std::move(pb), A, B), std::nullopt};
  if (j.contains("seed")) inst.seed = j["seed"].get<uint64_t>();
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::parse_error, "cannot open instance file " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("instance JSON: ") + e.what());
  }
  return instance_from_json(j);
}

// Canonical string and content hash: the caching/reporting key.
inline std::string canonical_instance_string(const ABPolynomial& G) {
  Json j = instance_to_json(G);
  j.erase("seed");
  return j.dump();
}

inline std::string instance_hash(const ABPolynomial& G) {
  return hex64(fnv1a64(canonical_instance_string(G)));
}

inline Json cyc_to_json(const CycInt& x) {
  Json j;
  j["p"] = x.p();
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.str());
  j["coeffs"] = coeffs;
  return j;
}

inline CycInt cyc_from_json(const Json& j) {
  require(j.contains("p") && j.contains("coeffs"), errc::parse_error, "bad CycInt payload");
  int64_t p = j["p"].get<int64_t>();
  std::vector<Int> c;
  for (const auto& v : j["coeffs"]) c.emplace_back(v.get<std::string>());
  return CycInt(p, std::move(c));
}

inline Json rat_to_json(const Rat& r) {
  return Json::array({rat_num(r).str(), rat_den(r).str()});
}

inline Json polygon_to_json(const SlopePolygon& P) {
  Json j;
  Json slopes = Json::array();
  for (const auto& s : P.slopes()) slopes.push_back(rat_to_json(s));
  j["slopes"] = slopes;
  Json verts = Json::array();
  for (const auto& [i, h] : P.vertices()) verts.push_back(Json::array({i, rat_num(h).str(), rat_den(h).str()}));
  j["vertices"] = verts;
  return j;
}

// (index, cumulative height) rows for external plotting.
inline std::string polygon_to_csv(const SlopePolygon& P) {
  std::ostringstream out;
  out << "index,height,height_float\n";
  auto h = P.heights();
  for (size_t j = 0; j < h.size(); ++j)
    out << j << "," << rat_string(h[j]) << "," << rat_to_double(h[j]) << "\n";
  return out.str();
}

}  // namespace absum
