#include "artifact/polyspace.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace msym {

namespace {
void check_same(const VkPolynomial& a, const VkPolynomial& b) {
  if (a.k() != b.k()) throw std::invalid_argument("weight mismatch");
}
}  // namespace

VkPolynomial::VkPolynomial(int k, RatVec coeffs) : k_(k), c_(std::move(coeffs)) {
  if (k < 2 || c_.size() != static_cast<std::size_t>(k - 1)) throw std::invalid_argument("bad V_k coefficient vector");
}

VkPolynomial VkPolynomial::monomial(int k, int i) {
  VkPolynomial p(k);
  p.c_.at(i) = 1;
  return p;
}

VkPolynomial VkPolynomial::linear_power(int k, const Rat& t, const Rat& u) {
  VkPolynomial p(k);
  const int n = k - 2;
  for (int i = 0; i <= n; ++i) p.c_[i] = Rat(binomial(n, i)) * rpow(t, i) * rpow(u, n - i);
  return p;
}

bool VkPolynomial::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

VkPolynomial& VkPolynomial::operator+=(const VkPolynomial& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

VkPolynomial& VkPolynomial::operator-=(const VkPolynomial& o) {
  check_same(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

VkPolynomial& VkPolynomial::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::string VkPolynomial::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + to_string(c_[i]);
  return s + "]";
}

VkPolynomial vk_act(const VkPolynomial& p, const Mat& g) {
  return VkPolynomial(p.k(), vk_act_coeffs<Rat>(p.coeffs(), g));
}

const RatVec& vk_inverse_binomials(int k) {
  static std::mutex mu;
  static std::map<int, RatVec> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  RatVec v(k - 1);
  for (int i = 0; i <= k - 2; ++i) v[i] = Rat(1) / Rat(binomial(k - 2, i));
  return cache.emplace(k, std::move(v)).first->second;
}

Rat vk_pair(const VkPolynomial& p, const VkPolynomial& q) {
  check_same(p, q);
  return vk_pair_coeffs<Rat>(p.coeffs(), q.coeffs(), vk_inverse_binomials(p.k()));
}

}  // namespace msym
