#include "tropbal/io.hpp"

#include <fstream>
#include <sstream>

namespace tropbal::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw InvalidInput(path.empty() ? msg : path + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string sub(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::int64_t integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t count(const Json& j, const std::string& path) {
  const std::int64_t v = integer(j, path);
  if (v <= 0) fail(path, "expected a positive integer");
  return static_cast<std::size_t>(v);
}

IntVec int_vector(const Json& j, const std::string& path) {
  IntVec out;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) out.push_back(integer(j[i], at(path, i)));
  return out;
}

Rational rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

Ray ray(const Json& j, const std::string& path) {
  try {
    return Ray(int_vector(j, path));
  } catch (const InvalidInput& e) {
    const std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    fail(path, msg);
  }
}

Json int_json(const IntVec& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

template <typename Fn>
auto rethrow_at(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidInput& e) {
    fail(path, e.what());
  }
}

}  // namespace

Json parse_json(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(what + ": invalid JSON (" + e.what() + ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Json to_json(const PuiseuxSeries& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) {
    out.push_back({{"exp", format_rational(e)}, {"coeff", format_rational(c)}});
  }
  return out;
}

PuiseuxSeries puiseux_from_json(const Json& j, const std::string& path) {
  PuiseuxSeries::TermMap terms;
  std::optional<Rational> last;
  for (std::size_t i = 0; i < array(j, path).size(); ++i) {
    const std::string p = at(path, i);
    Rational e = rational(field(j[i], "exp", p), sub(p, "exp"));
    Rational c = rational(field(j[i], "coeff", p), sub(p, "coeff"));
    if (last && e <= *last) fail(sub(p, "exp"), "exponents must be strictly increasing");
    if (c == 0) fail(sub(p, "coeff"), "coefficients must be nonzero");
    last = e;
    terms.emplace(std::move(e), std::move(c));
  }
  return PuiseuxSeries(std::move(terms));
}

Json to_json(const LaurentPolynomialK& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"exponent", int_json(e)}, {"coeff", to_json(c)}});
  }
  return {{"vars", f.dimension()}, {"terms", terms}};
}

LaurentPolynomialK polynomial_from_json(const Json& j) {
  const std::size_t n = count(field(j, "vars", ""), "vars");
  LaurentPolynomialK f(n);
  const Json& terms = array(field(j, "terms", ""), "terms");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = at("terms", i);
    IntVec e = int_vector(field(terms[i], "exponent", p), sub(p, "exponent"));
    if (e.size() != n) fail(sub(p, "exponent"), "length does not match vars");
    f.add_term(e, puiseux_from_json(field(terms[i], "coeff", p), sub(p, "coeff")));
  }
  return f;
}

Json to_json(const TropicalPolynomial& g) {
  Json pieces = Json::array();
  for (const auto& piece : g.pieces()) {
    pieces.push_back({{"a", int_json(piece.a)}, {"c", format_rational(piece.c)}});
  }
  return {{"n", g.dimension()}, {"pieces", pieces}};
}

TropicalPolynomial tropical_polynomial_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n", ""), "n");
  std::vector<AffinePiece> pieces;
  const Json& arr = array(field(j, "pieces", ""), "pieces");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at("pieces", i);
    pieces.push_back({int_vector(field(arr[i], "a", p), sub(p, "a")),
                      rational(field(arr[i], "c", p), sub(p, "c"))});
  }
  return rethrow_at("pieces", [&] { return TropicalPolynomial(n, std::move(pieces)); });
}

Json to_json(const TropicalCurve& c) {
  Json vertices = Json::array();
  for (const auto& v : c.vertices()) {
    Json coords = Json::array();
    for (const auto& x : v) coords.push_back(format_rational(x));
    vertices.push_back(coords);
  }
  Json edges = Json::array();
  for (const auto& e : c.edges()) {
    edges.push_back({{"ends", e.ends}, {"dir", int_json(e.direction)}, {"weight", e.weight}});
  }
  return {{"n", c.dimension()}, {"vertices", vertices}, {"edges", edges}};
}

TropicalCurve curve_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n", ""), "n");
  std::vector<RatVec> vertices;
  const Json& vs = array(field(j, "vertices", ""), "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = at("vertices", i);
    RatVec v;
    for (std::size_t k = 0; k < array(vs[i], p).size(); ++k) v.push_back(rational(vs[i][k], at(p, k)));
    vertices.push_back(std::move(v));
  }
  std::vector<CurveEdge> edges;
  const Json& es = array(field(j, "edges", ""), "edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string p = at("edges", i);
    CurveEdge e;
    for (auto x : int_vector(field(es[i], "ends", p), sub(p, "ends"))) {
      if (x < 0) fail(sub(p, "ends"), "vertex indices must be nonnegative");
      e.ends.push_back(static_cast<std::size_t>(x));
    }
    e.direction = int_vector(field(es[i], "dir", p), sub(p, "dir"));
    e.weight = integer(field(es[i], "weight", p), sub(p, "weight"));
    edges.push_back(std::move(e));
  }
  return TropicalCurve(n, std::move(vertices), std::move(edges));
}

Json to_json(const BundleDescriptor& b) {
  Json chern = Json::array();
  for (const auto& c : b.chern) chern.push_back(int_json(c));
  return {{"n", b.n}, {"picard_rank", b.r}, {"chern", chern}};
}

BundleDescriptor bundle_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n", ""), "n");
  const std::int64_t r = integer(field(j, "picard_rank", ""), "picard_rank");
  if (r < 0) fail("picard_rank", "must be nonnegative");
  std::vector<IntVec> chern;
  const Json& cs = array(field(j, "chern", ""), "chern");
  for (std::size_t i = 0; i < cs.size(); ++i) chern.push_back(int_vector(cs[i], at("chern", i)));
  return rethrow_at("chern", [&] {
    return BundleDescriptor(n, static_cast<std::size_t>(r), std::move(chern));
  });
}

Json to_json(const Fan1Skeleton& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(int_json(r.v()));
  return {{"n", f.dimension()}, {"rays", rays}};
}

Fan1Skeleton fan_from_json(const Json& j) {
  const std::size_t n = count(field(j, "n", ""), "n");
  std::vector<Ray> rays;
  const Json& rs = array(field(j, "rays", ""), "rays");
  for (std::size_t i = 0; i < rs.size(); ++i) rays.push_back(ray(rs[i], at("rays", i)));
  return rethrow_at("rays", [&] { return Fan1Skeleton(n, std::move(rays)); });
}

Json to_json(const DivisorClass& d) {
  Json horiz = Json::array();
  for (const auto& [r, c] : d.horiz) horiz.push_back({{"ray", int_json(r.v())}, {"coef", c}});
  return {{"horiz", horiz}, {"base", int_json(d.base)}};
}

DivisorClass divisor_from_json(const Json& j) {
  std::map<Ray, std::int64_t> horiz;
  const Json& hs = array(field(j, "horiz", ""), "horiz");
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::string p = at("horiz", i);
    horiz[ray(field(hs[i], "ray", p), sub(p, "ray"))] +=
        integer(field(hs[i], "coef", p), sub(p, "coef"));
  }
  return DivisorClass(std::move(horiz), int_vector(field(j, "base", ""), "base"));
}

Json to_json(const WeightFunction& w) {
  Json arr = Json::array();
  for (const auto& [r, k] : w.entries) arr.push_back({{"ray", int_json(r.v())}, {"w", k}});
  return {{"weights", arr}};
}

WeightFunction weights_from_json(const Json& j) {
  WeightFunction w;
  const Json& arr = array(field(j, "weights", ""), "weights");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = at("weights", i);
    Ray r = ray(field(arr[i], "ray", p), sub(p, "ray"));
    const std::int64_t k = integer(field(arr[i], "w", p), sub(p, "w"));
    if (k < 0) fail(sub(p, "w"), "weights must be nonnegative");
    if (!w.entries.emplace(std::move(r), k).second) fail(sub(p, "ray"), "duplicate ray");
  }
  return w;
}

Json to_json(const DefectVector& d) {
  return {{"balanced", d.balanced()}, {"defect", int_json(d.coords)}};
}

IntVec int_vector_from_text(std::string_view text, const std::string& what) {
  return int_vector(parse_json(text, what), what);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tropbal::io
