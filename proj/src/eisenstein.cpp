#include "artifact/eisenstein.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "artifact/groups.hpp"

namespace msym {

TorsionFunction::TorsionFunction(i64 N) : N_(N), v_(static_cast<std::size_t>(N * N)) {
  if (N < 1) throw std::invalid_argument("level must be positive");
}

TorsionFunction TorsionFunction::constant(i64 N, const Rat& c) {
  TorsionFunction f(N);
  for (auto& x : f.v_) x = c;
  return f;
}

TorsionFunction TorsionFunction::indicator(i64 N, i64 x, i64 y) {
  TorsionFunction f(N);
  f.at(x, y) = 1;
  return f;
}

TorsionFunction TorsionFunction::act(const Mat& g) const {
  const i64 det = g.det();
  if (det != 1 && det != -1) throw std::invalid_argument("torsion functions are acted on by GL2(Z)");
  TorsionFunction out(N_);
  for (i64 x = 0; x < N_; ++x)
    for (i64 y = 0; y < N_; ++y) {
      i64 u = mod(mod(x * mod(g.d, N_), N_) - mod(y * mod(g.c, N_), N_), N_);
      i64 v = mod(mod(y * mod(g.a, N_), N_) - mod(x * mod(g.b, N_), N_), N_);
      out.at(x, y) = det == 1 ? (*this)(u, v) : (*this)(-u, -v);
    }
  return out;
}

TorsionFunction TorsionFunction::minus() const {
  TorsionFunction out(N_);
  for (i64 x = 0; x < N_; ++x)
    for (i64 y = 0; y < N_; ++y) out.at(x, y) = (*this)(-x, -y);
  return out;
}

TorsionFunction TorsionFunction::lift(i64 M) const {
  if (M % N_ != 0) throw std::invalid_argument("lift target must be a multiple of the level");
  TorsionFunction out(M);
  for (i64 x = 0; x < M; ++x)
    for (i64 y = 0; y < M; ++y) out.at(x, y) = (*this)(x, y);
  return out;
}

TorsionFunction& TorsionFunction::operator+=(const TorsionFunction& o) {
  if (N_ != o.N_) throw std::invalid_argument("level mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

TorsionFunction& TorsionFunction::operator-=(const TorsionFunction& o) {
  if (N_ != o.N_) throw std::invalid_argument("level mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

TorsionFunction& TorsionFunction::operator*=(const Rat& s) {
  for (auto& x : v_) x *= s;
  return *this;
}

bool TorsionFunction::is_zero() const {
  for (const auto& x : v_)
    if (x != 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

Cyclo Cyclo::rational(i64 N, const Rat& r) {
  Cyclo z = zero(N);
  z.c[0] = r;
  return z;
}

Cyclo& Cyclo::add_term(i64 e, const Rat& r) {
  c[static_cast<std::size_t>(mod(e, N))] += r;
  return *this;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  Cyclo r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  Cyclo r = *this;
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  Cyclo r = zero(N);
  for (i64 i = 0; i < N; ++i) {
    if (c[i] == 0) continue;
    for (i64 j = 0; j < N; ++j)
      if (o.c[j] != 0) r.c[(i + j) % N] += c[i] * o.c[j];
  }
  return r;
}

Cyclo Cyclo::operator*(const Rat& s) const {
  Cyclo r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

RatVec cyclotomic_polynomial(i64 N) {
  static std::mutex mu;
  static std::map<i64, RatVec> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
  }
  // x^N - 1 divided by Phi_d for the proper divisors d
  RatVec p(static_cast<std::size_t>(N + 1));
  p[0] = -1;
  p[N] = 1;
  for (i64 d : divisors(N)) {
    if (d == N) continue;
    RatVec q = cyclotomic_polynomial(d);
    const std::size_t dq = q.size() - 1, dp = p.size() - 1;
    RatVec quot(dp - dq + 1);
    for (std::size_t i = dp + 1; i-- > dq;) {
      Rat t = p[i];
      quot[i - dq] = t;
      if (t != 0)
        for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= t * q[j];
    }
    p = quot;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[N] = p;
  return p;
}

RatVec Cyclo::reduced() const {
  RatVec phi = cyclotomic_polynomial(N);
  const std::size_t d = phi.size() - 1;
  RatVec r = c;
  for (std::size_t i = r.size(); i-- > d;) {
    Rat t = r[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) r[i - d + j] -= t * phi[j];
  }
  r.resize(d);
  return r;
}

bool Cyclo::is_rational() const {
  RatVec r = reduced();
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

Rat Cyclo::rational_value() const {
  if (!is_rational()) throw std::domain_error("group ring element is not rational");
  return reduced()[0];
}

std::array<double, 2> Cyclo::to_complex() const {
  double re = 0, im = 0;
  for (i64 e = 0; e < N; ++e) {
    if (c[e] == 0) continue;
    double t = 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(N), v = c[e].get_d();
    re += v * std::cos(t);
    im += v * std::sin(t);
  }
  return {re, im};
}

CycloFunction::CycloFunction(i64 N) : N_(N), v_(static_cast<std::size_t>(N * N), Cyclo::zero(N)) {}

CycloFunction CycloFunction::from(const TorsionFunction& f) {
  CycloFunction g(f.level());
  for (i64 x = 0; x < g.N_; ++x)
    for (i64 y = 0; y < g.N_; ++y) g.at(x, y).c[0] = f(x, y);
  return g;
}

CycloFunction CycloFunction::act(const Mat& g) const {
  CycloFunction out(N_);
  for (i64 x = 0; x < N_; ++x)
    for (i64 y = 0; y < N_; ++y)
      out.at(x, y) = (*this)(mod(x * mod(g.d, N_) - y * mod(g.c, N_), N_), mod(y * mod(g.a, N_) - x * mod(g.b, N_), N_));
  return out;
}

CycloFunction CycloFunction::minus() const {
  CycloFunction out(N_);
  for (i64 x = 0; x < N_; ++x)
    for (i64 y = 0; y < N_; ++y) out.at(x, y) = (*this)(-x, -y);
  return out;
}

bool CycloFunction::equals(const CycloFunction& o) const {
  if (N_ != o.N_) return false;
  for (std::size_t i = 0; i < v_.size(); ++i)
    if (!v_[i].equals(o.v_[i])) return false;
  return true;
}

namespace {
// s * zeta^e added into acc
void add_shifted(Cyclo& acc, const Cyclo& s, i64 e) {
  const i64 N = acc.N;
  for (i64 i = 0; i < N; ++i)
    if (s.c[i] != 0) acc.c[static_cast<std::size_t>(mod(i + e, N))] += s.c[i];
}
}  // namespace

CycloFunction fourier2(const CycloFunction& f) {
  const i64 N = f.level();
  CycloFunction out(N);
  const Rat inv(1, N);
  for (i64 n = 0; n < N; ++n)
    for (i64 m = 0; m < N; ++m) {
      Cyclo acc = Cyclo::zero(N);
      for (i64 a = 0; a < N; ++a)
        for (i64 b = 0; b < N; ++b) add_shifted(acc, f(a, b), a * m - b * n);
      out.at(n, m) = acc * inv;
    }
  return out;
}

CycloFunction partial_fourier1(const CycloFunction& f) {
  const i64 N = f.level();
  CycloFunction out(N);
  for (i64 n = 0; n < N; ++n)
    for (i64 m = 0; m < N; ++m)
      for (i64 a = 0; a < N; ++a) add_shifted(out.at(n, m), f(a, m), -a * n);
  return out;
}

CycloFunction partial_fourier2(const CycloFunction& f) {
  const i64 N = f.level();
  CycloFunction out(N);
  for (i64 n = 0; n < N; ++n)
    for (i64 m = 0; m < N; ++m)
      for (i64 b = 0; b < N; ++b) add_shifted(out.at(n, m), f(n, b), -b * m);
  return out;
}

std::vector<Cyclo> fourier1(const std::vector<Cyclo>& g) {
  const i64 N = static_cast<i64>(g.size());
  std::vector<Cyclo> out(g.size(), Cyclo::zero(N));
  for (i64 n = 0; n < N; ++n)
    for (i64 a = 0; a < N; ++a) add_shifted(out[n], g[a], -a * n);
  return out;
}

// ---------------------------------------------------------------------------

Rat beta_value(int h, i64 r, i64 N) {
  if (h < 0) throw std::invalid_argument("negative Bernoulli distribution index");
  if (h == 0) return Rat(1, N);
  Rat x(mod(r, N), N);
  x.canonicalize();
  if (h == 1) return -bernoulli_poly(1, x) - (x == 0 ? Rat(1, 2) : Rat(0));
  return -rpow(Rat(N), h - 1) * bernoulli_poly(h, x) / Rat(h);
}

RatVec beta_table(int h, i64 N) {
  RatVec t;
  for (i64 r = 0; r < N; ++r) t.push_back(beta_value(h, r, N));
  return t;
}

Rat beta_moment(const TorsionFunction& f, int a, int b, bool minus) {
  const i64 N = f.level();
  RatVec ba = beta_table(a, N), bb = beta_table(b, N);
  Rat s = 0;
  for (i64 x = 0; x < N; ++x) {
    if (ba[x] == 0) continue;
    Rat row = 0;
    for (i64 y = 0; y < N; ++y) row += (minus ? f(-x, -y) : f(x, y)) * bb[y];
    s += ba[x] * row;
  }
  return s;
}

TorsionFunction hecke_fn(const TorsionFunction& f, i64 ell, int k) {
  const i64 N = f.level();
  TorsionFunction out(N);
  const Rat lk1 = rpow(Rat(ell), k - 1), lk2 = rpow(Rat(ell), k - 2);
  const bool divides = N % ell == 0;
  for (i64 x = 0; x < N; ++x)
    for (i64 y = 0; y < N; ++y) {
      Rat v = lk1 * f(ell * x, y);
      for (i64 s = 0; s < N; ++s) {
        if (mod(ell * s - y, N) == 0) v += f(x, s);
        if (divides && mod(ell * (s - y), N) == 0) v -= lk2 * f(ell * x, s);
      }
      out.at(x, y) = v;
    }
  return out;
}

// ---------------------------------------------------------------------------

EisSymbol::EisSymbol(TorsionFunction f, int k) : f_(std::move(f)), k_(k) {
  if (k < 2) throw std::invalid_argument("weight must be at least 2");
  if (k == 2 && f_(0, 0) != 0) throw std::invalid_argument("weight 2 needs f(0,0) = 0");
  for (int h = 0; h <= k; ++h) betas_.push_back(beta_table(h, f_.level()));
  base_ = compute_base(f_, k_, betas_);
}

EisSymbol::Base EisSymbol::compute_base(const TorsionFunction& f, int k, const std::vector<RatVec>& betas) {
  const i64 N = f.level();
  auto moment = [&](int a, int b) {
    Rat s = 0;
    for (i64 x = 0; x < N; ++x) {
      if (betas[a][x] == 0) continue;
      Rat row = 0;
      for (i64 y = 0; y < N; ++y) row += f(-x, -y) * betas[b][y];
      s += betas[a][x] * row;
    }
    return s;
  };
  Base b;
  b.p_mod = VkPolynomial(k);
  for (int j = 0; j <= k - 2; ++j) {
    Rat c = Rat(binomial(k - 2, j)) * moment(k - 1 - j, j + 1);
    b.p_mod[j] = j % 2 ? -c : c;
  }
  b.c_inf = moment(k, 0);
  return b;
}

const EisSymbol::Base& EisSymbol::twisted(const Mat& g) const {
  const i64 N = f_.level();
  std::array<i64, 4> key{mod(g.a, N), mod(g.b, N), mod(g.c, N), mod(g.d, N)};
  if (key == std::array<i64, 4>{mod(1, N), 0, 0, mod(1, N)}) return base_;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  auto b = std::make_unique<Base>(compute_base(f_.act(g), k_, betas_));
  std::lock_guard<std::mutex> lock(mu_);
  // a concurrent insert computed the same value; keep the first
  auto [it, fresh] = memo_.emplace(key, std::move(b));
  return *it->second;
}

std::size_t EisSymbol::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.size();
}

VkPolynomial EisSymbol::inf_poly(int k, const Rat& c, const Rat& r) {
  // c/(k-1) ((r x + y)^{k-1} - y^{k-1}) / x
  VkPolynomial p(k);
  if (c == 0 || r == 0) return p;
  Rat s = c / Rat(k - 1), rp = r;
  for (int i = 0; i <= k - 2; ++i, rp *= r) p[i] = s * Rat(binomial(k - 1, i + 1)) * rp;
  return p;
}

VkPolynomial EisSymbol::eval_inf(const Rat& r) const { return inf_poly(k_, base_.c_inf, r); }

VkPolynomial EisSymbol::eval_term(const BaseTerm& t) const {
  const Base& b = twisted(t.g);
  VkPolynomial v = t.kind == BaseKind::ModSym ? b.p_mod : inf_poly(k_, b.c_inf, t.shift);
  if (t.g != identity()) v = vk_act(v, t.g.inverse());
  if (t.coef != 1) v *= Rat(t.coef);
  return v;
}

VkPolynomial EisSymbol::eval_terms(const std::vector<BaseTerm>& ts) const {
  VkPolynomial out(k_);
  for (const auto& t : ts) out += eval_term(t);
  return out;
}

VkPolynomial EisSymbol::eval_manin(const Cusp& r) const { return eval_terms(manin_path_infty(r)); }

VkPolynomial EisSymbol::cocycle(const Mat& gamma) const {
  StevensSplit s = stevens_split(gamma);
  if (s.upper) return eval_inf(s.shift);
  VkPolynomial v = eval_manin(s.cusp);
  // Psi(f)(gamma^{-1} B) = Psi(f|gamma^{-1})(B)|gamma
  VkPolynomial w = inf_poly(k_, twisted(s.outer).c_inf, s.shift);
  return v - vk_act(w, gamma);
}

// ---------------------------------------------------------------------------

Mat random_sl2(std::mt19937_64& rng, int length, int max_shift) {
  std::uniform_int_distribution<int> shift(-max_shift, max_shift);
  Mat g = identity();
  for (int i = 0; i < length; ++i) g = g * T().pow(shift(rng)) * sigma();
  return g;
}

bool distribution_check(i64 N, i64 M, i64 ax, i64 ay, int k, int samples, unsigned seed) {
  if (M < 1 || N % M != 0) throw std::invalid_argument("M must divide N");
  TorsionFunction lhs(N);
  bool any = false;
  for (i64 x = 0; x < N; ++x)
    for (i64 y = 0; y < N; ++y)
      if (mod(M * x - ax, N) == 0 && mod(M * y - ay, N) == 0) {
        lhs.at(x, y) += 1;
        any = true;
      }
  if (!any) throw std::invalid_argument("a must lie in M (Z/NZ)^2");
  lhs *= rpow(Rat(M), k - 2);
  EisSymbol L(lhs, k), R(TorsionFunction::indicator(N, ax, ay), k);
  if (L.p_mod() != R.p_mod() || L.c_inf() != R.c_inf()) return false;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    Mat g = random_sl2(rng);
    if (L.cocycle(g) != R.cocycle(g)) return false;
  }
  return true;
}

}  // namespace msym
