#include "artifact/qexp.hpp"

#include <stdexcept>

namespace msym {

Rat l_special(const RatVec& g, int h) {
  if (h < 1) throw std::invalid_argument("l_special needs h >= 1");
  const i64 N = static_cast<i64>(g.size());
  Rat s = 0;
  for (i64 a = 0; a < N; ++a)
    if (g[a] != 0) s += g[a] * beta_value(h, a, N);
  return s;
}

Cyclo l_special(const std::vector<Cyclo>& g, int h) {
  if (h < 1) throw std::invalid_argument("l_special needs h >= 1");
  const i64 N = static_cast<i64>(g.size());
  Cyclo s = Cyclo::zero(g.empty() ? 1 : g[0].N);
  for (i64 a = 0; a < N; ++a) s = s + g[a] * beta_value(h, a, N);
  return s;
}

QExpansion eis_qexp(const CycloFunction& f, int k, std::size_t n_terms) {
  if (k < 2) throw std::invalid_argument("weight must be at least 2");
  const i64 N = f.level();
  QExpansion q;
  q.level = N;
  q.weight = k;
  q.n_terms = n_terms;
  const CycloFunction p = partial_fourier2(f), pm = partial_fourier2(f.minus());

  std::vector<Cyclo> g0;
  for (i64 x = 0; x < N; ++x) g0.push_back(p(0, -x));
  q.constant = l_special(g0, k);

  const Rat sign = k % 2 ? Rat(-1) : Rat(1);
  q.coeffs.assign(n_terms + 1, Cyclo::zero(N));
  for (std::size_t t = 1; t <= n_terms; ++t)
    for (std::size_t m = 1; m <= t; ++m) {
      if (t % m) continue;
      const i64 n = static_cast<i64>(t / m), mm = static_cast<i64>(m);
      const Rat w = rpow(Rat(mm), k - 1);
      q.coeffs[t] = q.coeffs[t] + (p(n, -mm) + pm(n, -mm) * sign) * w;
    }
  return q;
}

Rat mellin_rational(const TorsionFunction& f, int k, int j) {
  if (j <= 0 || j >= k - 2) throw std::invalid_argument("only the middle Mellin values 0 < j < k-2 are rational");
  Rat m = beta_moment(f, k - 1 - j, j + 1, true);
  return (j + 1) % 2 ? -m : m;
}

}  // namespace msym
