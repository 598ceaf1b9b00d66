#include "artifact/suites.hpp"

#include <algorithm>
#include <cmath>

#include "artifact/numeric.hpp"
#include "artifact/pairing.hpp"
#include "artifact/qexp.hpp"

namespace msym {

namespace {

// a few fixed test functions on (Z/NZ)^2, none of them even or odd
std::vector<TorsionFunction> sample_functions(i64 N) {
  std::vector<TorsionFunction> out;
  TorsionFunction f(N), g(N);
  for (i64 x = 0; x < N; ++x)
    for (i64 y = 0; y < N; ++y) {
      f.at(x, y) = Rat((x * 3 + y * y + 1) % 5) - 2;
      g.at(x, y) = Rat(x * x + 2 * y, 3 + y);
    }
  out.push_back(f);
  out.push_back(g.act(Mat{1, 1, 0, 1}));
  out.push_back(TorsionFunction::indicator(N, 1, 0));
  out.push_back(TorsionFunction::indicator(N, 0, 1));
  return out;
}

double max_abs(const std::vector<cplx>& v) {
  double m = 0;
  for (const cplx& x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<Residual> mellin_suite() {
  double worst = 0;
  for (i64 N : {3, 4, 5})
    for (int k : {4, 6})
      for (const TorsionFunction& f : sample_functions(N)) {
        CycloFunction g = fourier2(f);
        for (i64 x = 0; x < N; ++x)
          for (i64 y = 0; y < N; ++y) g.at(x, y) = g(x, y) * Rat(1, N);
        for (int j = 1; j < k - 2; ++j) {
          const cplx num = numeric_mellin(g, k, j + 1);
          worst = std::max(worst, std::abs(num - mellin_rational(f, k, j).get_d()));
        }
      }
  double em = 0;
  for (i64 N = 1; N <= 6; ++N)
    for (int h = 2; h <= 4; ++h)
      for (i64 a = 0; a < N; ++a) {
        RatVec g(static_cast<std::size_t>(N));
        g[a] = 1;
        g[(a + 1) % N] += Rat(2, 3);
        g[(a + 2) % N] -= Rat(5, 7);
        em = std::max(em, std::abs(l_special(g, h).get_d() - l_value_em(g, h)));
      }
  return {{"mellin_rational vs quadrature (abs)", worst, kMellinTol},
          {"l_special vs Euler-Maclaurin (abs)", em, kEulerMaclaurinTol}};
}

std::vector<Residual> delta_suite() {
  const FloatPeriod fp = delta_periods();
  const double scale = max_abs(fp.r);
  cplx odd = 0, even = 0;
  for (int m = 1; m <= 9; m += 2) odd += binomial(10, m).get_d() * fp.r[m];
  const RatVec lam = lambda_coeffs(12);
  for (int m = 0; m <= 10; m += 2) even += lam[m].get_d() * fp.r[m];
  // even-index periods share one phase, odd-index periods the orthogonal one
  double phase = 0;
  const cplx u0 = fp.r[0] / std::abs(fp.r[0]), u1 = fp.r[1] / std::abs(fp.r[1]);
  for (std::size_t j = 0; j < fp.r.size(); ++j) {
    const cplx u = j % 2 ? u1 : u0;
    phase = std::max(phase, std::abs((fp.r[j] * std::conj(u)).imag()) / scale);
  }
  phase = std::max(phase, std::abs((u0 * std::conj(u1)).real()));
  return {{"odd binomial relation (rel)", std::abs(odd) / scale, kPeriodRelationTol},
          {"lambda_{12,m} relation (rel)", std::abs(even) / scale, kPeriodRelationTol},
          {"period parity phases", phase, kPeriodRelationTol}};
}

std::vector<Residual> petersson_suite() {
  const FloatPeriod fp = delta_periods();
  std::vector<cplx> conj;
  for (const cplx& r : fp.r) conj.push_back(std::conj(r));
  const double norm = petersson_norm_delta();
  const cplx lhs = haberland_numeric(fp.r, conj), rhs = -std::pow(cplx(0, 2), 11) * norm;
  const cplx self = haberland_numeric(fp.r, fp.r);
  return {{"{Per, conj Per} vs -(2i)^11 <Delta,Delta> (rel)", std::abs(lhs - rhs) / std::abs(rhs), kPeterssonTol},
          {"{Per, Per} (normalized)", std::abs(self) / std::abs(lhs), kSelfPairingTol},
          {"parallel vs serial quadrature (rel)", std::abs(norm - petersson_norm_delta_serial()) / norm, 1e-12}};
}

}  // namespace msym
