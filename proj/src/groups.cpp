#include "artifact/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace msym {

i64 euler_phi(i64 n) {
  i64 r = n;
  for (i64 p : prime_factors(n)) r = r / p * (p - 1);
  return r;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> d;
  for (i64 i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> ps;
  for (i64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

Subgroup full_modular_group() {
  Subgroup g;
  g.name = "SL2(Z)";
  g.member = [](const Mat& m) { return m.det() == 1; };
  g.key = [](const Mat&) { return CosetKey{}; };
  return g;
}

Subgroup gamma0(i64 N) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  Subgroup g;
  g.name = "Gamma0(" + std::to_string(N) + ")";
  g.level = N;
  g.member = [N](const Mat& m) { return m.det() == 1 && mod(m.c, N) == 0; };
  // point (c:d) of P^1(Z/N), normalized by the smallest unit multiple
  g.key = [N](const Mat& m) {
    i64 c = mod(m.c, N), d = mod(m.d, N);
    CosetKey best{N, N};
    for (i64 u = 1; u <= N; ++u) {
      if (gcd64(u, N) != 1) continue;
      CosetKey k{mod(u * c, N), mod(u * d, N)};
      if (k < best) best = k;
    }
    if (N == 1) best = {0, 0};
    return best;
  };
  return g;
}

Subgroup gamma1(i64 N) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  Subgroup g;
  g.name = "Gamma1(" + std::to_string(N) + ")";
  g.level = N;
  g.contains_minus_identity = N <= 2;
  g.member = [N](const Mat& m) { return m.det() == 1 && mod(m.c, N) == 0 && mod(m.d - 1, N) == 0; };
  g.key = [N](const Mat& m) {
    CosetKey a{mod(m.c, N), mod(m.d, N)}, b{mod(-m.c, N), mod(-m.d, N)};
    return std::min(a, b);
  };
  return g;
}

Subgroup gamma_full(i64 N) {
  if (N < 1) throw std::invalid_argument("level must be positive");
  Subgroup g;
  g.name = "Gamma(" + std::to_string(N) + ")";
  g.level = N;
  g.contains_minus_identity = N <= 2;
  g.member = [N](const Mat& m) {
    return m.det() == 1 && mod(m.a - 1, N) == 0 && mod(m.b, N) == 0 && mod(m.c, N) == 0 && mod(m.d - 1, N) == 0;
  };
  g.key = [N](const Mat& m) {
    CosetKey a{mod(m.a, N), mod(m.b, N), mod(m.c, N), mod(m.d, N)};
    CosetKey b{mod(-m.a, N), mod(-m.b, N), mod(-m.c, N), mod(-m.d, N)};
    return std::min(a, b);
  };
  return g;
}

Subgroup conjugate(const Subgroup& base, const Mat& alpha) {
  const i64 D = alpha.det();
  if (D <= 0) throw std::invalid_argument("conjugating matrix needs positive determinant");
  Subgroup g;
  g.name = "conj(" + base.name + "," + alpha.str() + ")";
  g.level = base.level * D;
  g.contains_minus_identity = base.contains_minus_identity;
  auto mem = base.member;
  g.member = [mem, alpha, D](const Mat& m) {
    if (m.det() != 1) return false;
    Mat t = alpha * m * alpha.adjugate();
    if (t.a % D || t.b % D || t.c % D || t.d % D) return false;
    return mem(Mat{t.a / D, t.b / D, t.c / D, t.d / D});
  };
  return g;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup g;
  g.name = a.name + "&" + b.name;
  g.level = a.level / gcd64(a.level, b.level) * b.level;
  g.contains_minus_identity = a.contains_minus_identity && b.contains_minus_identity;
  auto ma = a.member, mb = b.member;
  g.member = [ma, mb](const Mat& m) { return ma(m) && mb(m); };
  if (a.key && b.key) {
    auto ka = a.key, kb = b.key;
    // both keys are PSL-invariant, and a coset of the intersection is a pair of cosets
    g.key = [ka, kb](const Mat& m) {
      CosetKey k = ka(m);
      k.push_back(-1);
      CosetKey k2 = kb(m);
      k.insert(k.end(), k2.begin(), k2.end());
      return k;
    };
  }
  return g;
}

Subgroup make_group(const std::string& kind, i64 N) {
  if (kind == "gamma0") return gamma0(N);
  if (kind == "gamma1") return gamma1(N);
  if (kind == "gamma") return gamma_full(N);
  if (kind == "sl2z") return full_modular_group();
  throw std::invalid_argument("unknown group kind: " + kind);
}

namespace {

i64 genus_from(i64 mu, i64 nu2, i64 nu3, i64 cusps) {
  i64 twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps;
  if (twelve_g % 12) throw std::logic_error("non-integral genus");
  return twelve_g / 12;
}

}  // namespace

ClassicalInvariants classical_gamma0(i64 N) {
  ClassicalInvariants r{};
  r.index = N;
  for (i64 p : prime_factors(N)) r.index = r.index / p * (p + 1);
  r.nu2 = (N % 4 == 0) ? 0 : 1;
  r.nu3 = (N % 9 == 0) ? 0 : 1;
  for (i64 p : prime_factors(N)) {
    if (p != 2) r.nu2 *= (p % 4 == 1) ? 2 : 0;
    if (p != 3) r.nu3 *= (p % 3 == 1) ? 2 : 0;
  }
  r.cusps = 0;
  for (i64 d : divisors(N)) r.cusps += euler_phi(gcd64(d, N / d));
  r.genus = genus_from(r.index, r.nu2, r.nu3, r.cusps);
  return r;
}

ClassicalInvariants classical_gamma1(i64 N) {
  if (N <= 2) return classical_gamma0(N);
  ClassicalInvariants r{};
  r.index = N * N;
  for (i64 p : prime_factors(N)) r.index = r.index / (p * p) * (p * p - 1);
  r.index /= 2;
  r.nu2 = 0;
  r.nu3 = (N == 3) ? 1 : 0;
  if (N == 4) {
    r.cusps = 3;
  } else {
    i64 s = 0;
    for (i64 d : divisors(N)) s += euler_phi(d) * euler_phi(N / d);
    r.cusps = s / 2;
  }
  r.genus = genus_from(r.index, r.nu2, r.nu3, r.cusps);
  return r;
}

ClassicalInvariants classical_gamma(i64 N) {
  if (N == 1) return classical_gamma0(1);
  ClassicalInvariants r{};
  r.index = N * N * N;
  for (i64 p : prime_factors(N)) r.index = r.index / (p * p) * (p * p - 1);
  if (N > 2) r.index /= 2;
  r.nu2 = r.nu3 = 0;
  r.cusps = (N == 2) ? 3 : r.index / N;
  r.genus = genus_from(r.index, r.nu2, r.nu3, r.cusps);
  return r;
}

i64 classical_dim_cusp_forms_gamma0(i64 N, int k) {
  if (k % 2 || k < 2) throw std::invalid_argument("even weight >= 2 expected");
  ClassicalInvariants c = classical_gamma0(N);
  if (k == 2) return c.genus;
  return (k - 1) * (c.genus - 1) + (k / 2 - 1) * c.cusps + c.nu2 * (k / 4) + c.nu3 * (k / 3);
}

}  // namespace msym
