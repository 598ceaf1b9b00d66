#include "artifact/json_io.hpp"

#include <stdexcept>

namespace msym {

json to_json(const Rat& x) { return to_string(x); }

json to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Cusp& c) { return c.str(); }

json to_json(const Mat& m) { return json::array({m.a, m.b, m.c, m.d}); }

json to_json(const VkPolynomial& p) { return json{{"k", p.k()}, {"coeffs", to_json(p.coeffs())}}; }

json to_json(const FareySymbol& s) {
  json v = json::array(), star = json::array(), mu = json::array(), glue = json::array();
  for (const Cusp& c : s.vertices()) v.push_back(to_json(c));
  for (const FareyArc& a : s.arcs) {
    star.push_back(a.star);
    mu.push_back(a.mu);
    glue.push_back(to_json(a.glue));
  }
  return json{{"vertices", v}, {"star", star}, {"mu", mu}, {"glue", glue}};
}

json to_json(const TorsionFunction& f) {
  json rows = json::array();
  for (i64 x = 0; x < f.level(); ++x) {
    json row = json::array();
    for (i64 y = 0; y < f.level(); ++y) row.push_back(to_json(f(x, y)));
    rows.push_back(row);
  }
  return json{{"N", f.level()}, {"values", rows}};
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

json to_json(const OrbitTriple& t) { return json::array({t.q1, t.q2, t.u}); }

json to_json(const Cyclo& c) { return json{{"N", c.N}, {"coeffs", to_json(c.reduced())}}; }

json to_json(const QExpansion& q) {
  json c = json::array();
  for (std::size_t n = 1; n < q.coeffs.size(); ++n) c.push_back(to_json(q.coeffs[n]));
  return json{{"level", q.level}, {"weight", q.weight}, {"n_terms", q.n_terms}, {"constant", to_json(q.constant)},
              {"coeffs", c}};
}

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational string or integer");
}

TorsionFunction torsion_function_from_json(const json& j) {
  const i64 N = j.at("N").get<i64>();
  if (N < 1) throw std::invalid_argument("level must be positive");
  const json& v = j.at("values");
  if (!v.is_array() || static_cast<i64>(v.size()) != N) throw std::invalid_argument("values must be an N x N array");
  TorsionFunction f(N);
  for (i64 x = 0; x < N; ++x) {
    const json& row = v.at(static_cast<std::size_t>(x));
    if (!row.is_array() || static_cast<i64>(row.size()) != N) throw std::invalid_argument("values must be an N x N array");
    for (i64 y = 0; y < N; ++y) f.at(x, y) = rat_from_json(row.at(static_cast<std::size_t>(y)));
  }
  return f;
}

FareySymbol farey_from_json(const json& j) {
  const json& v = j.at("vertices");
  const json& star = j.at("star");
  const json& mu = j.at("mu");
  const json& glue = j.at("glue");
  const std::size_t n = star.size();
  // the polygon is closed: arc i runs from vertex i to vertex i+1, the last one back to vertex 0
  if (n == 0 || v.size() != n || mu.size() != n || glue.size() != n) throw std::invalid_argument("inconsistent Farey symbol JSON");
  FareySymbol s;
  for (std::size_t i = 0; i < n; ++i) {
    FareyArc a;
    a.from = Cusp::parse(v[i].get<std::string>());
    a.to = Cusp::parse(v[(i + 1) % n].get<std::string>());
    a.star = star[i].get<int>();
    a.mu = mu[i].get<int>();
    const json& g = glue[i];
    a.glue = Mat{g.at(0).get<i64>(), g.at(1).get<i64>(), g.at(2).get<i64>(), g.at(3).get<i64>()};
    s.arcs.push_back(a);
  }
  return s;
}

}  // namespace msym
