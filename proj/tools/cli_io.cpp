#include "cli_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace toric::cli {

json load(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) return json::parse(text);
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open " + text);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json to_json(const Rational& x) {
  if (denominator(x) == 1) return to_json(Integer(numerator(x)));
  return to_string(x);
}

json to_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const std::vector<IntVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

json to_json(const Cone& c) { return to_json(c.generators()); }

json to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.maximal_cones()) cones.push_back(to_json(f.display(c)));
  return {{"ambient_dim", f.ambient_dim()}, {"maximal_cones", cones}};
}

json to_json(const LatticePolytope& p) {
  json vs = json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return {{"ambient_dim", p.ambient_dim()}, {"vertices", vs}};
}

json to_json(const TDivisor& d) {
  json coeffs = json::array();
  for (const auto& c : d.coefficients) coeffs.push_back(to_json(c));
  return {{"fan", to_json(d.fan)}, {"rays", to_json(d.fan.rays())}, {"coefficients", coeffs}};
}

json to_json(const BinomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& b : ideal.generators) gens.push_back(json::array({to_json(b.lhs()), to_json(b.rhs())}));
  return {{"num_vars", ideal.num_vars}, {"generators", gens}};
}

json to_json(const MonomialMap& m) { return {{"source_dim", m.source_dim}, {"exponents", to_json(m.exponents)}}; }

Integer integer_from(const json& j) {
  try {
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
  } catch (const std::exception&) {
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from(j));
    Integer num = integer_from(json(s.substr(0, slash)));
    Integer den = integer_from(json(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in " + s);
    return Rational(num, den);
  }
  return Rational(integer_from(j));
}

IntVector vector_from(const json& j) {
  if (!j.is_array()) throw ParseError("expected an integer vector, got " + j.dump());
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from(x));
  return v;
}

std::vector<IntVector> vectors_from(const json& j) {
  if (!j.is_array()) throw ParseError("expected a list of vectors, got " + j.dump());
  std::vector<IntVector> vs;
  for (const auto& x : j) vs.push_back(vector_from(x));
  for (const auto& v : vs)
    if (v.size() != vs[0].size()) throw ParseError("vectors of different lengths in " + j.dump());
  return vs;
}

std::vector<IntVector> points_from(const json& j) {
  if (j.is_object()) {
    if (!j.contains("points")) throw ParseError("point set object needs \"points\"");
    return vectors_from(j.at("points"));
  }
  return vectors_from(j);
}

Cone cone_from(const json& j) {
  auto gens = vectors_from(j);
  if (gens.empty()) throw ParseError("a cone needs at least one generator; write [[0,...,0]] for the zero cone");
  return Cone(gens[0].size(), gens);
}

IntMatrix matrix_from(const json& j) {
  auto rows = vectors_from(j);
  if (rows.empty()) throw ParseError("empty matrix");
  return IntMatrix(rows, rows[0].size());
}

Fan fan_from(const json& j) {
  json cones = j;
  std::optional<std::size_t> n;
  if (j.is_object()) {
    if (!j.contains("maximal_cones")) throw ParseError("fan object needs \"maximal_cones\"");
    cones = j.at("maximal_cones");
    if (j.contains("ambient_dim")) {
      if (!j.at("ambient_dim").is_number_unsigned()) throw ParseError("ambient_dim must be a nonnegative integer");
      n = j.at("ambient_dim").get<std::size_t>();
    }
  }
  if (!cones.is_array()) throw ParseError("expected a list of cones, got " + cones.dump());
  std::vector<std::vector<IntVector>> raw;
  for (const auto& c : cones) raw.push_back(vectors_from(c));
  for (const auto& c : raw)
    for (const auto& v : c) {
      if (!n) n = v.size();
      if (v.size() != *n) throw ParseError("fan generators must all have length " + std::to_string(*n));
    }
  if (!n) throw ParseError("cannot infer the ambient dimension of an empty fan");
  return validate_fan(*n, raw);
}

LatticePolytope polytope_from(const json& j) {
  if (!j.is_object()) throw ParseError("polytope must be {\"inequalities\": ...} or {\"vertices\": ...}");
  if (j.contains("vertices")) {
    const auto& vs = j.at("vertices");
    if (!vs.is_array() || vs.empty()) throw ParseError("vertices must be a nonempty list");
    std::vector<RationalVector> pts;
    for (const auto& v : vs) {
      if (!v.is_array()) throw ParseError("vertex must be a list, got " + v.dump());
      RationalVector p;
      for (const auto& x : v) p.push_back(rational_from(x));
      if (p.size() != vs[0].size()) throw ParseError("vertices of different lengths");
      pts.push_back(p);
    }
    return LatticePolytope::from_vertices(pts[0].size(), pts);
  }
  if (j.contains("inequalities")) {
    const auto& is = j.at("inequalities");
    if (!is.is_array() || is.empty()) throw ParseError("inequalities must be a nonempty list");
    std::vector<Inequality> ineqs;
    for (const auto& e : is) {
      if (!e.is_array() || e.size() != 2) throw ParseError("inequality must be [[normal...], offset], got " + e.dump());
      ineqs.push_back({vector_from(e[0]), rational_from(e[1])});
      if (ineqs.back().normal.size() != ineqs[0].normal.size()) throw ParseError("normals of different lengths");
    }
    return LatticePolytope::from_inequalities(ineqs[0].normal.size(), ineqs);
  }
  throw ParseError("polytope must have \"inequalities\" or \"vertices\"");
}

namespace {

// Counterclockwise from the positive x-axis.
bool angle_less(const IntVector& a, const IntVector& b) {
  auto half = [](const IntVector& v) { return v[1] < 0 || (v[1] == 0 && v[0] < 0); };
  if (half(a) != half(b)) return !half(a);
  return det2(a, b) > 0;
}

Fan complete_fan_2d(std::vector<IntVector> rays) {
  if (rays.empty() || rays[0].size() != 2)
    throw ParseError("a divisor without a fan needs 2D rays; pass the fan with \"fan\" or --fan");
  std::vector<IntVector> sorted = rays;
  for (auto& r : sorted) r = primitive(r);
  std::sort(sorted.begin(), sorted.end(), angle_less);
  std::vector<std::vector<IntVector>> cones;
  for (std::size_t i = 0; i < sorted.size(); ++i) cones.push_back({sorted[i], sorted[(i + 1) % sorted.size()]});
  return validate_fan(2, cones);
}

}  // namespace

TDivisor divisor_from(const json& j, const Fan* fan) {
  json coeffs = j;
  std::optional<Fan> own;
  std::optional<std::vector<IntVector>> rays;
  if (j.is_object()) {
    if (!j.contains("coefficients")) throw ParseError("divisor object needs \"coefficients\"");
    coeffs = j.at("coefficients");
    if (j.contains("fan")) own = fan_from(j.at("fan"));
    if (j.contains("rays")) rays = vectors_from(j.at("rays"));
  }
  if (!own && fan) own = *fan;
  if (!own) {
    if (!rays) throw ParseError("divisor needs a fan or its rays");
    own = complete_fan_2d(*rays);
  }
  IntVector c = vector_from(coeffs);
  const auto& fr = own->rays();
  if (c.size() != fr.size())
    throw ParseError("divisor has " + std::to_string(c.size()) + " coefficients but the fan has " +
                     std::to_string(fr.size()) + " rays");
  TDivisor d{*own, IntVector(fr.size())};
  if (!rays) {
    d.coefficients = c;
    return d;
  }
  if (rays->size() != c.size()) throw ParseError("rays and coefficients differ in length");
  std::vector<bool> seen(fr.size(), false);
  for (std::size_t i = 0; i < rays->size(); ++i) {
    auto it = std::find(fr.begin(), fr.end(), primitive((*rays)[i]));
    if (it == fr.end()) throw ParseError("ray " + to_string((*rays)[i]) + " is not a ray of the fan");
    auto k = static_cast<std::size_t>(it - fr.begin());
    if (seen[k]) throw ParseError("ray " + to_string((*rays)[i]) + " listed twice");
    seen[k] = true;
    d.coefficients[k] = c[i];
  }
  return d;
}

BinomialIdeal ideal_from(const json& j) {
  if (!j.is_object() || !j.contains("generators")) throw ParseError("ideal needs \"generators\"");
  BinomialIdeal ideal;
  for (const auto& g : j.at("generators")) {
    if (!g.is_array() || g.size() != 2) throw ParseError("generator must be [lhs, rhs], got " + g.dump());
    try {
      ideal.generators.emplace_back(vector_from(g[0]), vector_from(g[1]));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("num_vars")) ideal.num_vars = j.at("num_vars").get<std::size_t>();
  else if (!ideal.generators.empty()) ideal.num_vars = ideal.generators[0].num_vars();
  for (const auto& b : ideal.generators)
    if (b.num_vars() != ideal.num_vars) throw ParseError("generator length does not match num_vars");
  return ideal;
}

MonomialMap map_from(const json& j) {
  if (!j.is_object() || !j.contains("exponents")) throw ParseError("monomial map needs \"exponents\"");
  MonomialMap m;
  m.exponents = vectors_from(j.at("exponents"));
  m.source_dim = j.contains("source_dim") ? j.at("source_dim").get<std::size_t>()
                                          : (m.exponents.empty() ? 0 : m.exponents[0].size());
  for (const auto& e : m.exponents)
    if (e.size() != m.source_dim) throw ParseError("exponent length does not match source_dim");
  return m;
}

}  // namespace toric::cli
