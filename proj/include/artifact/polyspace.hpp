#pragma once

#include <string>
#include <vector>

#include "artifact/modgroup.hpp"
#include "artifact/rational.hpp"

namespace msym {

// coefficient i multiplies x^i y^{k-2-i}; generic in the scalar type so the
// floating oracle can reuse the same action and form
template <class S>
std::vector<S> vk_act_coeffs(const std::vector<S>& p, const Mat& g) {
  const std::size_t n = p.size() - 1;  // degree k-2
  // L1 = d x - c y, L2 = -b x + a y, stored by power of x
  std::vector<S> l1{S(-g.c), S(g.d)}, l2{S(g.a), S(-g.b)};
  auto mul = [](const std::vector<S>& u, const std::vector<S>& v) {
    std::vector<S> r(u.size() + v.size() - 1, S(0));
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) r[i + j] += u[i] * v[j];
    return r;
  };
  std::vector<std::vector<S>> p1{{S(1)}}, p2{{S(1)}};
  for (std::size_t i = 1; i <= n; ++i) {
    p1.push_back(mul(p1.back(), l1));
    p2.push_back(mul(p2.back(), l2));
  }
  std::vector<S> out(n + 1, S(0));
  for (std::size_t i = 0; i <= n; ++i) {
    if (p[i] == S(0)) continue;
    std::vector<S> t = mul(p1[i], p2[n - i]);
    for (std::size_t j = 0; j <= n; ++j) out[j] += p[i] * t[j];
  }
  return out;
}

// (-1)^{k-2} sum_i (-1)^i a_i b_{k-2-i} / C(k-2,i)
template <class S>
S vk_pair_coeffs(const std::vector<S>& a, const std::vector<S>& b, const std::vector<S>& inv_binom) {
  const std::size_t n = a.size() - 1;
  S r(0);
  for (std::size_t i = 0; i <= n; ++i) {
    S t = a[i] * b[n - i] * inv_binom[i];
    if (i % 2) r -= t;
    else r += t;
  }
  if (n % 2) r = -r;
  return r;
}

class VkPolynomial {
 public:
  VkPolynomial() = default;
  explicit VkPolynomial(int k) : k_(k), c_(k - 1) {}
  VkPolynomial(int k, RatVec coeffs);

  static VkPolynomial monomial(int k, int i);  // x^i y^{k-2-i}
  static VkPolynomial linear_power(int k, const Rat& t, const Rat& u = 1);  // (t x + u y)^{k-2}

  int k() const { return k_; }
  const RatVec& coeffs() const { return c_; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  bool is_zero() const;

  VkPolynomial& operator+=(const VkPolynomial& o);
  VkPolynomial& operator-=(const VkPolynomial& o);
  VkPolynomial& operator*=(const Rat& s);
  VkPolynomial operator+(const VkPolynomial& o) const { return VkPolynomial(*this) += o; }
  VkPolynomial operator-(const VkPolynomial& o) const { return VkPolynomial(*this) -= o; }
  VkPolynomial operator-() const { return VkPolynomial(*this) *= Rat(-1); }
  VkPolynomial operator*(const Rat& s) const { return VkPolynomial(*this) *= s; }
  bool operator==(const VkPolynomial& o) const { return k_ == o.k_ && c_ == o.c_; }
  bool operator!=(const VkPolynomial& o) const { return !(*this == o); }

  std::string str() const;

 private:
  int k_ = 2;
  RatVec c_{Rat(0)};
};

VkPolynomial vk_act(const VkPolynomial& p, const Mat& g);
Rat vk_pair(const VkPolynomial& p, const VkPolynomial& q);
const RatVec& vk_inverse_binomials(int k);

}  // namespace msym
