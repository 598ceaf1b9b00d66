#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "artifact/farey.hpp"
#include "artifact/polyspace.hpp"
#include "artifact/rational.hpp"

namespace msym {

class ModSym;

// Hom_Gamma(Delta_0, V_k) presented by the values m(j) = Phi(xi_j {0,oo}) on the
// cosets of +-Gamma \ SL2(Z), subject to the two Manin relations
class ModSymSpace : public std::enable_shared_from_this<ModSymSpace> {
 public:
  using Ptr = std::shared_ptr<const ModSymSpace>;

  static Ptr build(const FareyGroup::Ptr& group, int k);

  const FareyGroup::Ptr& group() const { return group_; }
  int k() const { return k_; }
  std::size_t n_cosets() const { return group_->sl2_reps().size(); }
  std::size_t ambient_size() const { return n_cosets() * static_cast<std::size_t>(k_ - 1); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVec>& basis() const { return basis_; }
  const RationalMatrix& relations() const { return relations_; }
  bool minus_identity() const { return minus_identity_; }

  ModSym element(std::size_t i) const;
  ModSym zero() const;
  ModSym from_coordinates(const RatVec& c) const;
  // throws std::invalid_argument if the values violate a relation
  ModSym from_values(std::vector<VkPolynomial> m) const;
  // coordinates in basis(); throws if x is not in the space
  RatVec coordinates(const ModSym& x) const;
  bool satisfies_relations(const RatVec& flat) const;

 private:
  ModSymSpace() = default;
  FareyGroup::Ptr group_;
  int k_ = 2;
  bool minus_identity_ = false;
  RationalMatrix relations_;
  std::vector<RatVec> basis_;
  std::vector<std::size_t> free_cols_;
};

class ModSym {
 public:
  ModSym() = default;
  ModSym(ModSymSpace::Ptr space, std::vector<VkPolynomial> m) : space_(std::move(space)), m_(std::move(m)) {}

  const ModSymSpace::Ptr& space() const { return space_; }
  int k() const { return space_->k(); }
  const std::vector<VkPolynomial>& values() const { return m_; }
  RatVec flat() const;

  // Phi(g {0,oo}) for g in SL2(Z)
  VkPolynomial eval_unimodular(const Mat& g) const;
  // Phi({r,s}) = Phi({s}) - Phi({r})
  VkPolynomial eval_path(const Cusp& r, const Cusp& s) const;
  VkPolynomial eval_arc(const FareySymbol& sym, const TildeArc& a) const;

  ModSym operator+(const ModSym& o) const;
  ModSym operator-(const ModSym& o) const;
  ModSym operator*(const Rat& s) const;
  bool operator==(const ModSym& o) const { return m_ == o.m_; }
  bool is_zero() const;

 private:
  ModSymSpace::Ptr space_;
  std::vector<VkPolynomial> m_;
};

// Phi({oo, r}) from the values on the unimodular path; F(g) must return Phi(g {0,oo})
template <class F>
VkPolynomial eval_from_infinity(int k, const Cusp& r, F&& unimodular) {
  VkPolynomial out(k);
  for (const Mat& g : unimodular_path(r)) out += unimodular(g);
  return out;
}

// value on a tilde arc (halves and thirds on elliptic arcs), given any path evaluator
template <class P>
VkPolynomial eval_tilde_arc(const FareySymbol& sym, const TildeArc& t, P&& path) {
  const FareyArc& a = sym.arcs[t.arc];
  if (t.part == ArcPart::Whole) return path(a.from, a.to);
  if (a.mu == 2) return path(a.from, a.to) * Rat(1, 2);
  Cusp tp = act(a.glue, a.from);
  VkPolynomial rs = path(a.from, a.to);
  VkPolynomial r = t.part == ArcPart::U ? path(a.from, tp) + rs : rs + path(tp, a.to);
  return r * Rat(1, 3);
}

// Hom_Gamma(Delta, V_k): one generator Eis_P per usable cusp class
class BoundarySpace {
 public:
  struct CuspClass {
    Cusp cusp;
    Mat gamma_p;
    i64 width = 0;
    bool irregular = false;
    bool usable = false;
  };

  BoundarySpace(const FareyGroup::Ptr& group, int k);

  const std::vector<CuspClass>& classes() const { return classes_; }
  // indices of the classes carrying a nonzero generator
  const std::vector<int>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  int k() const { return k_; }

  // class index of the cusp s, and h in Gamma with s = h gamma_P oo
  int classify(const Cusp& s, Mat* h = nullptr) const;
  // Eis_P({s})
  VkPolynomial eval(int cls, const Cusp& s) const;
  // sum_b coeffs[b] Eis_{basis[b]}({s})
  VkPolynomial eval(const RatVec& coeffs, const Cusp& s) const;
  // image in Hom(Delta_0): (r,s) -> Phi0({s}) - Phi0({r})
  ModSym embed(const ModSymSpace::Ptr& space, const RatVec& coeffs) const;

 private:
  FareyGroup::Ptr group_;
  int k_;
  std::vector<CuspClass> classes_;
  std::vector<int> basis_;
  // per SL2 coset j: class index and member g_j with gamma_P T^m = +- g_j xi_j
  std::vector<int> coset_class_;
  std::vector<Mat> coset_elt_;
};

}  // namespace msym
