#include "artifact/numeric.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include <cmath>

#include "artifact/polyspace.hpp"

namespace msym {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> delta_table(std::size_t n) {
  std::vector<Int> c = delta_qexp(n);
  std::vector<double> out;
  for (const Int& x : c) out.push_back(x.get_d());
  return out;
}

// Delta(x + iy) from the first terms of its q-expansion
cplx delta_at(const std::vector<double>& tau, double x, double y) {
  const cplx q = std::polar(std::exp(-2 * kPi * y), 2 * kPi * x);
  cplx qn = q, s = 0;
  for (std::size_t n = 1; n < tau.size(); ++n, qn *= q) s += tau[n] * qn;
  return s;
}

using Rule = boost::math::quadrature::gauss<double, 20>;

// nodes and weights of the 20-point rule on [a, b]
template <class F>
void for_gauss_nodes(double a, double b, F&& f) {
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double h = (b - a) / 2, m = (a + b) / 2;
  for (std::size_t i = 0; i < x.size(); ++i) {
    f(m + h * x[i], h * w[i]);
    if (x[i] != 0) f(m - h * x[i], h * w[i]);
  }
}

struct PeterssonGrid {
  std::vector<double> xs, wx;
};

PeterssonGrid x_grid(int x_panels) {
  PeterssonGrid g;
  for (int p = 0; p < x_panels; ++p) {
    double a = -0.5 + static_cast<double>(p) / x_panels, b = a + 1.0 / x_panels;
    for_gauss_nodes(a, b, [&](double x, double w) {
      g.xs.push_back(x);
      g.wx.push_back(w);
    });
  }
  return g;
}

// int_{sqrt(1-x^2)}^{oo} |Delta|^2 y^10 dy, truncated where |Delta|^2 < 1e-40 relative
double column(const std::vector<double>& tau, double x, int y_panels) {
  const double y0 = std::sqrt(1 - x * x), span = 7.0;
  double s = 0;
  for (int p = 0; p < y_panels; ++p) {
    double a = y0 + span * p / y_panels, b = y0 + span * (p + 1) / y_panels;
    for_gauss_nodes(a, b, [&](double y, double w) { s += w * std::norm(delta_at(tau, x, y)) * std::pow(y, 10); });
  }
  return s;
}

}  // namespace

double hurwitz_zeta_em(double s, double q, int m, int p) {
  if (s == 1) throw std::domain_error("Hurwitz zeta has a pole at s = 1");
  using L = long double;
  const L ls = s;
  L sum = 0;
  for (int n = 0; n < m; ++n) sum += std::pow(n + static_cast<L>(q), -ls);
  const L a = m + static_cast<L>(q);
  sum += std::pow(a, 1 - ls) / (ls - 1) + std::pow(a, -ls) / 2;
  L rising = ls;  // s (s+1) ... (s + 2j - 2)
  for (int j = 1; j <= p; ++j) {
    if (j > 1) rising *= (ls + 2 * j - 3) * (ls + 2 * j - 2);
    if (rising == 0) break;
    sum += boost::math::bernoulli_b2n<L>(j) / boost::math::factorial<L>(2 * j) * rising * std::pow(a, -ls - 2 * j + 1);
  }
  return static_cast<double>(sum);
}

double l_value_em(const RatVec& g, int h) {
  const std::size_t N = g.size();
  long double s = 0;
  for (std::size_t a = 1; a <= N; ++a) {
    const double ga = g[a % N].get_d();
    if (ga != 0)
      s += ga * std::pow(static_cast<long double>(N), h - 1) * hurwitz_zeta_em(1 - h, static_cast<double>(a) / N);
  }
  return static_cast<double>(s);
}

std::vector<Int> delta_qexp(std::size_t n_terms) {
  // prod_{n>=1} (1 - q^n) up to q^{n_terms - 1}, then its 24th power, shifted by q
  std::vector<Int> e(n_terms, Int(0));
  if (n_terms == 0) return {};
  e[0] = 1;
  for (std::size_t n = 1; n < n_terms; ++n)
    for (std::size_t i = n_terms - 1; i >= n; --i) {
      e[i] -= e[i - n];
      if (i == n) break;
    }
  std::vector<Int> p(n_terms, Int(0));
  p[0] = 1;
  for (int r = 0; r < 24; ++r) {
    std::vector<Int> t(n_terms, Int(0));
    for (std::size_t i = 0; i < n_terms; ++i)
      if (p[i] != 0)
        for (std::size_t j = 0; i + j < n_terms; ++j) t[i + j] += p[i] * e[j];
    p = std::move(t);
  }
  std::vector<Int> out(n_terms + 1, Int(0));
  for (std::size_t i = 0; i < n_terms; ++i) out[i + 1] = p[i];
  return out;
}

FloatPeriod delta_periods(double precision) {
  const int k = 12;
  const std::size_t budget = 200;
  if (!(precision > 0)) throw std::invalid_argument("delta periods: precision must be positive");
  // double sums of size ~1 cannot resolve finer than this
  if (precision < 1e-15) throw PrecisionError("delta periods: precision below double resolution");
  // tail bound |tau(n)| e^{-2 pi n} with |tau(n)| < n^6
  std::size_t n_max = 1;
  while (std::pow(static_cast<double>(n_max), 6) * std::exp(-2 * kPi * n_max) > precision / 10) {
    if (++n_max > budget) throw PrecisionError("delta periods: term budget exhausted");
  }
  const std::vector<double> tau = delta_table(n_max);
  // I_j = int_i^{i oo} Delta(t) t^j dt = i^{j+1} sum tau(n) int_1^oo y^j e^{-2 pi n y} dy
  auto I = [&](int j) {
    double s = 0;
    for (std::size_t n = 1; n < tau.size(); ++n) {
      const double a = 2 * kPi * n;
      double inner = 0, term = 1;  // sum_{m<=j} a^m/m!
      for (int m = 0; m <= j; ++m) {
        if (m > 0) term *= a / m;
        inner += term;
      }
      s += tau[n] * boost::math::factorial<double>(j) * std::exp(-a) * inner / std::pow(a, j + 1);
    }
    return std::pow(cplx(0, 1), j + 1) * s;
  };
  FloatPeriod fp;
  fp.precision = precision;
  for (int j = 0; j <= k - 2; ++j) fp.r.push_back(-I(j) + (j % 2 ? -1.0 : 1.0) * I(k - 2 - j));
  return fp;
}

cplx haberland_numeric(const std::vector<cplx>& r1, const std::vector<cplx>& r2) {
  if (r1.size() != r2.size() || r1.empty()) throw std::invalid_argument("period vectors differ in length");
  const int w = static_cast<int>(r1.size()) - 1;
  std::vector<cplx> p1(r1.size()), p2(r2.size()), ib(r1.size());
  for (int j = 0; j <= w; ++j) {
    const double b = binomial(w, j).get_d();
    p1[j] = b * r1[j];
    p2[j] = b * r2[j];
    ib[j] = 1.0 / b;
  }
  std::vector<cplx> a = vk_act_coeffs(p1, T()), c = vk_act_coeffs(p1, T().inverse());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= c[i];
  return vk_pair_coeffs(a, p2, ib) / 6.0;
}

double petersson_norm_delta(int x_panels, int y_panels) {
  const std::vector<double> tau = delta_table(40);
  const PeterssonGrid g = x_grid(x_panels);
  const long n = static_cast<long>(g.xs.size());
  double s = 0;
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (long i = 0; i < n; ++i) s += g.wx[i] * column(tau, g.xs[i], y_panels);
  return s;
}

double petersson_norm_delta_serial(int x_panels, int y_panels) {
  const std::vector<double> tau = delta_table(40);
  const PeterssonGrid g = x_grid(x_panels);
  double s = 0;
  for (std::size_t i = 0; i < g.xs.size(); ++i) s += g.wx[i] * column(tau, g.xs[i], y_panels);
  return s;
}

cplx numeric_mellin(const CycloFunction& g, int k, int s, double tol) {
  if (s <= 0 || s >= k) throw std::invalid_argument("numeric Mellin needs 0 < s < k");
  const i64 N = g.level();
  // g'(x, y) = g(-y, x), so that E_g(-1/t) = t^k E_{g'}(t)
  CycloFunction gp(N);
  for (i64 x = 0; x < N; ++x)
    for (i64 y = 0; y < N; ++y) gp.at(x, y) = g(-y, x);
  std::size_t T = 1;
  while (std::pow(static_cast<double>(T), k + 1) * std::exp(-2 * kPi * T / N) > tol * 1e-4) ++T;
  const QExpansion e = eis_qexp(g, k, T), ep = eis_qexp(gp, k, T);
  auto floats = [](const QExpansion& q) {
    std::vector<cplx> c;
    for (const Cyclo& x : q.coeffs) {
      auto v = x.to_complex();
      c.emplace_back(v[0], v[1]);
    }
    return c;
  };
  const std::vector<cplx> a = floats(e), ap = floats(ep);
  auto phi = [N](const std::vector<cplx>& c, double y) {
    const double q = std::exp(-2 * kPi * y / N);
    cplx sum = 0;
    double qt = q;
    for (std::size_t t = 1; t < c.size(); ++t, qt *= q) sum += c[t] * qt;
    return sum;
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  auto integrate = [&](const std::vector<cplx>& c, int power) {
    auto val = [&](double y) {
      // beyond this point q_N underflows and the integrand is zero to double precision
      if (2 * kPi * (1 + y) / N > 700) return cplx(0);
      return phi(c, 1 + y) * std::pow(1 + y, power);
    };
    auto re = [&](double y) { return val(y).real(); };
    auto im = [&](double y) { return val(y).imag(); };
    return cplx(integrator.integrate(re, tol), integrator.integrate(im, tol));
  };
  const cplx i(0, 1);
  const auto c0 = e.constant.to_complex(), c0p = ep.constant.to_complex();
  const cplx I0(c0[0], c0[1]), I0p(c0p[0], c0p[1]);
  const cplx ik = std::pow(i, k);
  cplx m = integrate(a, s - 1) + ik * integrate(ap, k - s - 1) + ik * I0p / static_cast<double>(s - k) -
           I0 / static_cast<double>(s);
  return std::pow(i, s) * m;
}

}  // namespace msym
