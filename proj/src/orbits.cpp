#include "artifact/orbits.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "artifact/groups.hpp"

namespace msym {

namespace {

int ord(i64 n, i64 p) {
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

i64 ipow(i64 p, int e) {
  i64 r = 1;
  while (e-- > 0) r = checked_mul(r, p);
  return r;
}

// orbit of every point of (Z/NZ)^2, indexed x*N + y
const std::vector<OrbitTriple>& orbit_table(i64 N) {
  static std::mutex mu;
  static std::map<i64, std::vector<OrbitTriple>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  std::vector<OrbitTriple> t;
  t.reserve(static_cast<std::size_t>(N * N));
  for (i64 x = 0; x < N; ++x)
    for (i64 y = 0; y < N; ++y) t.push_back(orbit_of(x, y, N));
  return cache.emplace(N, std::move(t)).first->second;
}

// orbits O with p O contained in the orbit t (i.e. the orbits covering {b : p b in t})
std::vector<OrbitTriple> preimage_orbits(const OrbitTriple& t, i64 N, i64 p) {
  const auto& tab = orbit_table(N);
  std::vector<OrbitTriple> out;
  for (i64 x = 0; x < N; ++x)
    for (i64 y = 0; y < N; ++y)
      if (tab[static_cast<std::size_t>(mod(p * x, N) * N + mod(p * y, N))] == t) {
        const OrbitTriple& o = tab[static_cast<std::size_t>(x * N + y)];
        if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string OrbitTriple::str() const {
  return "[" + std::to_string(q1) + "," + std::to_string(q2) + "," + std::to_string(u) + "]";
}

i64 orbit_modulus(i64 N, i64 q1, i64 q2) { return gcd64(N / q1, q1 / q2); }

OrbitTriple orbit_of(i64 x, i64 y, i64 N) {
  x = mod(x, N);
  y = mod(y, N);
  OrbitTriple t;
  t.q1 = gcd64(x, N);
  t.q2 = gcd64(y, t.q1);
  i64 g = orbit_modulus(N, t.q1, t.q2);
  t.u = g == 1 ? 0 : mod(mod(x / t.q1, g) * mod(y / t.q2, g), g);
  return t;
}

i64 orbit_card(const OrbitTriple& t, i64 N) {
  i64 n1 = N / t.q1, n2 = t.q1 / t.q2;
  return n1 * euler_phi(n1) * euler_phi(n2) / euler_phi(gcd64(n1, n2));
}

std::vector<OrbitTriple> all_orbits(i64 N) {
  std::vector<OrbitTriple> out;
  for (i64 q1 : divisors(N))
    for (i64 q2 : divisors(q1)) {
      i64 g = orbit_modulus(N, q1, q2);
      if (g == 1) {
        out.push_back({q1, q2, 0});
        continue;
      }
      for (i64 u = 1; u < g; ++u)
        if (gcd64(u, g) == 1) out.push_back({q1, q2, u});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<i64, i64> representative(const OrbitTriple& t, i64 N) {
  const i64 g = orbit_modulus(N, t.q1, t.q2), n2 = t.q1 / t.q2;
  for (i64 v = t.u;; v += g) {
    if (gcd64(v, n2) != 1) continue;
    std::pair<i64, i64> r{mod(t.q1, N), mod(checked_mul(t.q2, v), N)};
    if (orbit_of(r.first, r.second, N) != t) throw std::logic_error("orbit representative mismatch for " + t.str());
    return r;
  }
}

std::vector<std::pair<i64, i64>> orbit_points(const OrbitTriple& t, i64 N) {
  const auto& tab = orbit_table(N);
  std::vector<std::pair<i64, i64>> pts;
  for (i64 x = 0; x < N; ++x)
    for (i64 y = 0; y < N; ++y)
      if (tab[static_cast<std::size_t>(x * N + y)] == t) pts.emplace_back(x, y);
  return pts;
}

TorsionFunction orbit_indicator(const OrbitTriple& t, i64 N) {
  TorsionFunction f(N);
  for (auto [x, y] : orbit_points(t, N)) f.at(x, y) = 1;
  return f;
}

TorsionFunction combination_function(const OrbitCombination& c, i64 N) {
  TorsionFunction f(N);
  for (const auto& [t, coef] : c) f += orbit_indicator(t, N) * coef;
  return f;
}

std::vector<OrbitTriple> basis_v(i64 N, int k) {
  std::vector<OrbitTriple> out;
  for (i64 d : divisors(N)) {
    i64 g = gcd64(d, N / d);
    i64 q1 = N / g, q2 = N / (d * g);
    if (k == 2 && q1 == N && q2 == N) continue;
    if (g == 1) {
      out.push_back({q1, q2, 0});
      continue;
    }
    for (i64 u = 1; u < g; ++u)
      if (gcd64(u, g) == 1) out.push_back({q1, q2, u});
  }
  return out;
}

bool member_basis(const OrbitTriple& t, i64 N) {
  for (i64 p : prime_factors(N)) {
    int a = ord(N / t.q1, p), b = ord(t.q1 / t.q2, p), c = ord(t.q2, p);
    if (!(a == b || (a <= b && c == 0))) return false;
  }
  return true;
}

i64 descent_measure(const OrbitTriple& t, i64 N) {
  i64 n1 = N / t.q1, s = n1 / orbit_modulus(N, t.q1, t.q2);
  return t.q2 * s * s;
}

OrbitCombination reduce_orbit(const OrbitTriple& t, i64 N, int W) {
  static std::mutex mu;
  static std::map<std::tuple<i64, int, OrbitTriple>, OrbitCombination> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({N, W, t});
    if (it != memo.end()) return it->second;
  }
  OrbitCombination out;
  if (member_basis(t, N)) {
    out[t] = 1;
  } else {
    i64 p = 0;
    bool up = false;
    for (i64 q : prime_factors(N)) {
      int a = ord(N / t.q1, q), b = ord(t.q1 / t.q2, q), c = ord(t.q2, q);
      if (a == b || (a <= b && c == 0)) continue;
      p = q;
      up = a > b;
      break;
    }
    const Rat pw = rpow(Rat(p), W);
    const i64 m0 = descent_measure(t, N);
    OrbitCombination step;
    if (up) {
      // [t'] = p^W sum_{O in pre(t')} [O] with t' the orbit of p t
      auto [x, y] = representative(t, N);
      OrbitTriple tp = orbit_of(p * x, p * y, N);
      step[tp] += 1 / pw;
      for (const auto& o : preimage_orbits(tp, N, p))
        if (o != t) step[o] -= 1;
    } else {
      // t lies in p (Z/NZ)^2
      for (const auto& o : preimage_orbits(t, N, p)) step[o] += pw;
    }
    for (const auto& [o, c] : step) {
      if (c == 0) continue;
      if (descent_measure(o, N) >= m0)
        throw std::logic_error("orbit descent does not decrease M at " + t.str() + " -> " + o.str());
      for (const auto& [b, cb] : reduce_orbit(o, N, W)) out[b] += c * cb;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[{N, W, t}] = out;
  return out;
}

OrbitTriple cusp_to_basis(const Cusp& r, i64 N) {
  i64 x = r.p, y = r.q;
  i64 d = gcd64(y, N), v = y / d, g = gcd64(d, N / d);
  OrbitTriple t{N / g, N / (d * g), 0};
  if (g > 1) t.u = mod(checked_mul(mod(x, g), mod(v, g)), g);
  return t;
}

}  // namespace msym
