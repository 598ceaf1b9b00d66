#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "artifact/modgroup.hpp"
#include "artifact/polyspace.hpp"
#include "artifact/rational.hpp"

namespace msym {

// rational function on (Z/NZ)^2, values[x][y] stored row-major
class TorsionFunction {
 public:
  TorsionFunction() = default;
  explicit TorsionFunction(i64 N);

  static TorsionFunction constant(i64 N, const Rat& c);
  static TorsionFunction indicator(i64 N, i64 x, i64 y);

  i64 level() const { return N_; }
  const Rat& operator()(i64 x, i64 y) const { return v_[idx(x, y)]; }
  Rat& at(i64 x, i64 y) { return v_[idx(x, y)]; }

  // (f|g)(v) = f(v g^{-1}) on row vectors, g in GL2(Z)
  TorsionFunction act(const Mat& g) const;
  TorsionFunction minus() const;
  // pullback along (Z/MZ)^2 -> (Z/NZ)^2, N | M
  TorsionFunction lift(i64 M) const;
  bool invariant_under(const Mat& g) const { return act(g) == *this; }

  TorsionFunction& operator+=(const TorsionFunction& o);
  TorsionFunction& operator-=(const TorsionFunction& o);
  TorsionFunction& operator*=(const Rat& s);
  TorsionFunction operator+(const TorsionFunction& o) const { return TorsionFunction(*this) += o; }
  TorsionFunction operator-(const TorsionFunction& o) const { return TorsionFunction(*this) -= o; }
  TorsionFunction operator*(const Rat& s) const { return TorsionFunction(*this) *= s; }
  bool operator==(const TorsionFunction& o) const { return N_ == o.N_ && v_ == o.v_; }
  bool is_zero() const;

 private:
  std::size_t idx(i64 x, i64 y) const { return static_cast<std::size_t>(mod(x, N_) * N_ + mod(y, N_)); }
  i64 N_ = 1;
  RatVec v_{Rat(0)};
};

// element of the group ring Q[Z/NZ]; coefficient e multiplies zeta_N^e
struct Cyclo {
  i64 N = 1;
  RatVec c{Rat(0)};

  static Cyclo zero(i64 N) { return Cyclo{N, RatVec(static_cast<std::size_t>(N))}; }
  static Cyclo rational(i64 N, const Rat& r);
  Cyclo& add_term(i64 e, const Rat& r);
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo operator*(const Rat& s) const;
  // coefficients modulo the N-th cyclotomic polynomial (length phi(N))
  RatVec reduced() const;
  bool equals(const Cyclo& o) const { return (*this - o).reduced() == RatVec(reduced().size()); }
  // defined over Q after reduction
  bool is_rational() const;
  Rat rational_value() const;  // requires is_rational()
  // complex value with zeta = exp(2 pi i / N)
  std::array<double, 2> to_complex() const;
};

// integer coefficients of Phi_N, constant term first
RatVec cyclotomic_polynomial(i64 N);

class CycloFunction {
 public:
  CycloFunction() = default;
  explicit CycloFunction(i64 N);
  static CycloFunction from(const TorsionFunction& f);

  i64 level() const { return N_; }
  const Cyclo& operator()(i64 x, i64 y) const { return v_[idx(x, y)]; }
  Cyclo& at(i64 x, i64 y) { return v_[idx(x, y)]; }
  CycloFunction act(const Mat& g) const;
  CycloFunction minus() const;
  bool equals(const CycloFunction& o) const;
  bool equals(const TorsionFunction& f) const { return equals(from(f)); }

 private:
  std::size_t idx(i64 x, i64 y) const { return static_cast<std::size_t>(mod(x, N_) * N_ + mod(y, N_)); }
  i64 N_ = 1;
  std::vector<Cyclo> v_;
};

// f^(n,m) = N^{-1} sum f(a,b) zeta^{am - bn}
CycloFunction fourier2(const CycloFunction& f);
inline CycloFunction fourier2(const TorsionFunction& f) { return fourier2(CycloFunction::from(f)); }
// P_1(f)(n,m) = sum_a f(a,m) zeta^{-an}; P_2(f)(n,m) = sum_b f(n,b) zeta^{-bm}
CycloFunction partial_fourier1(const CycloFunction& f);
CycloFunction partial_fourier2(const CycloFunction& f);
// one-variable transform g^(n) = sum_a g(a) zeta^{-an}
std::vector<Cyclo> fourier1(const std::vector<Cyclo>& g);

Rat beta_value(int h, i64 r, i64 N);
// values beta_h(0..N-1)
RatVec beta_table(int h, i64 N);
// sum f(+-x, +-y) beta_a(x) beta_b(y)
Rat beta_moment(const TorsionFunction& f, int a, int b, bool minus);

TorsionFunction hecke_fn(const TorsionFunction& f, i64 ell, int k);

// Psi_k^rat(f) on infinitesimal symbols, with the boundary part Theta_k dropped
class EisSymbol {
 public:
  EisSymbol(TorsionFunction f, int k);

  const TorsionFunction& f() const { return f_; }
  int k() const { return k_; }
  i64 level() const { return f_.level(); }
  // Psi({oo,0}) and int f^- dbeta_k dbeta_0
  const VkPolynomial& p_mod() const { return base_.p_mod; }
  const Rat& c_inf() const { return base_.c_inf; }

  // Psi([0,r]_oo)
  VkPolynomial eval_inf(const Rat& r) const;
  // Psi(g . B) for one base symbol B, using Psi(f)(g D) = Psi(f|g)(D)|g^{-1}
  VkPolynomial eval_term(const BaseTerm& t) const;
  VkPolynomial eval_terms(const std::vector<BaseTerm>& ts) const;
  // Psi([pi_oo(0), pi_r(oo)])
  VkPolynomial eval_manin(const Cusp& r) const;
  // c(gamma) = Psi([Z_oo, gamma^{-1} Z_oo]), Z_oo = pi_oo(0)
  VkPolynomial cocycle(const Mat& gamma) const;

  std::size_t memo_size() const;

 private:
  struct Base {
    VkPolynomial p_mod;
    Rat c_inf;
  };
  static Base compute_base(const TorsionFunction& f, int k, const std::vector<RatVec>& betas);
  const Base& twisted(const Mat& g) const;
  static VkPolynomial inf_poly(int k, const Rat& c, const Rat& r);

  TorsionFunction f_;
  int k_;
  std::vector<RatVec> betas_;  // beta_h for h = 0..k
  Base base_;
  mutable std::mutex mu_;
  mutable std::map<std::array<i64, 4>, std::unique_ptr<Base>> memo_;
};

// M^{k-2} sum_{Mb = a} Psi(1_b) = Psi(1_a) on P_mod, c_inf and `samples` random cocycle values
bool distribution_check(i64 N, i64 M, i64 ax, i64 ay, int k, int samples = 20, unsigned seed = 1);

// deterministic pseudo-random element of SL2(Z) (word in T^n and sigma)
Mat random_sl2(std::mt19937_64& rng, int length = 6, int max_shift = 4);

}  // namespace msym
