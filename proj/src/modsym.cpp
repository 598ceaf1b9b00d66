#include "artifact/modsym.hpp"

#include <stdexcept>

namespace msym {

namespace {

// matrix of P -> P|g in the monomial basis (column i is the image of x^i y^{k-2-i})
RationalMatrix action_matrix(int k, const Mat& g) {
  const std::size_t n = static_cast<std::size_t>(k - 1);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    VkPolynomial img = vk_act(VkPolynomial::monomial(k, static_cast<int>(i)), g);
    for (std::size_t r = 0; r < n; ++r) m(r, i) = img[r];
  }
  return m;
}

}  // namespace

ModSymSpace::Ptr ModSymSpace::build(const FareyGroup::Ptr& group, int k) {
  if (k < 2) throw std::invalid_argument("weight must be at least 2");
  auto s = std::shared_ptr<ModSymSpace>(new ModSymSpace());
  s->group_ = group;
  s->k_ = k;
  s->minus_identity_ = group->group().member(-identity());
  const auto& reps = group->sl2_reps();
  const std::size_t n = reps.size(), d = static_cast<std::size_t>(k - 1);
  RationalMatrix rel(0, n * d);

  // add rows for sum_t m(j_t)|gamma_t^{-1} = 0
  auto add = [&](const std::vector<std::pair<int, Mat>>& terms) {
    RationalMatrix block(d, n * d);
    for (const auto& [j, gi] : terms) {
      RationalMatrix a = action_matrix(k, gi);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) block(r, j * d + c) += a(r, c);
    }
    for (std::size_t r = 0; r < d; ++r) rel.append_row(block.row(r));
  };
  auto term = [&](const Mat& g) {
    Mat gamma;
    int j = group->sl2_coset(g, &gamma);
    return std::pair<int, Mat>(j, gamma.inverse());
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Mat& xi = reps[i];
    add({{static_cast<int>(i), identity()}, term(xi * sigma())});
    add({{static_cast<int>(i), identity()}, term(xi * tau()), term(xi * tau() * tau())});
    // m = m|(-1) = (-1)^k m
    if (s->minus_identity_ && k % 2 == 1) add({{static_cast<int>(i), identity()}});
  }
  s->relations_ = rel;
  Rref rr = rref(rel);
  std::vector<bool> piv(n * d, false);
  for (auto p : rr.pivots) piv[p] = true;
  for (std::size_t c = 0; c < n * d; ++c)
    if (!piv[c]) s->free_cols_.push_back(c);
  s->basis_ = kernel_basis(rel);
  return ModSymSpace::Ptr(s);
}

bool ModSymSpace::satisfies_relations(const RatVec& flat) const {
  if (relations_.rows() == 0) return true;
  RatVec r = relations_.apply(flat);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

ModSym ModSymSpace::zero() const {
  return ModSym(shared_from_this(), std::vector<VkPolynomial>(n_cosets(), VkPolynomial(k_)));
}

ModSym ModSymSpace::from_coordinates(const RatVec& c) const {
  if (c.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
  const std::size_t d = static_cast<std::size_t>(k_ - 1);
  std::vector<VkPolynomial> m(n_cosets(), VkPolynomial(k_));
  for (std::size_t b = 0; b < dim(); ++b) {
    if (c[b] == 0) continue;
    for (std::size_t j = 0; j < n_cosets(); ++j)
      for (std::size_t r = 0; r < d; ++r) m[j][r] += c[b] * basis_[b][j * d + r];
  }
  return ModSym(shared_from_this(), std::move(m));
}

ModSym ModSymSpace::element(std::size_t i) const {
  RatVec c(dim());
  c.at(i) = 1;
  return from_coordinates(c);
}

ModSym ModSymSpace::from_values(std::vector<VkPolynomial> m) const {
  ModSym x(shared_from_this(), std::move(m));
  if (x.values().size() != n_cosets()) throw std::invalid_argument("wrong number of coset values");
  if (!satisfies_relations(x.flat())) throw std::invalid_argument("values violate the Manin relations");
  return x;
}

RatVec ModSymSpace::coordinates(const ModSym& x) const {
  RatVec flat = x.flat();
  RatVec c(dim());
  for (std::size_t b = 0; b < dim(); ++b) c[b] = flat[free_cols_[b]];
  if (from_coordinates(c).flat() != flat) throw std::invalid_argument("element is not in the symbol space");
  return c;
}

RatVec ModSym::flat() const {
  RatVec v;
  for (const auto& p : m_) v.insert(v.end(), p.coeffs().begin(), p.coeffs().end());
  return v;
}

VkPolynomial ModSym::eval_unimodular(const Mat& g) const {
  Mat gamma;
  int j = space_->group()->sl2_coset(g, &gamma);
  return vk_act(m_[j], gamma.inverse());
}

VkPolynomial ModSym::eval_path(const Cusp& r, const Cusp& s) const {
  auto u = [&](const Mat& g) { return eval_unimodular(g); };
  if (r == s) return VkPolynomial(k());
  return eval_from_infinity(k(), s, u) - eval_from_infinity(k(), r, u);
}

VkPolynomial ModSym::eval_arc(const FareySymbol& sym, const TildeArc& a) const {
  return eval_tilde_arc(sym, a, [&](const Cusp& r, const Cusp& s) { return eval_path(r, s); });
}

ModSym ModSym::operator+(const ModSym& o) const {
  ModSym r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] += o.m_[i];
  return r;
}

ModSym ModSym::operator-(const ModSym& o) const {
  ModSym r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] -= o.m_[i];
  return r;
}

ModSym ModSym::operator*(const Rat& s) const {
  ModSym r = *this;
  for (auto& p : r.m_) p *= s;
  return r;
}

bool ModSym::is_zero() const {
  for (const auto& p : m_)
    if (!p.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

BoundarySpace::BoundarySpace(const FareyGroup::Ptr& group, int k) : group_(group), k_(k) {
  const auto& reps = group->sl2_reps();
  coset_class_.assign(reps.size(), -1);
  coset_elt_.assign(reps.size(), identity());
  const bool minus = group->group().member(-identity());
  for (const CuspCycle& c : cusp_cycles(group->symbol())) {
    CuspClass cc;
    cc.cusp = c.cusp;
    cc.gamma_p = c.gamma_p;
    cc.width = c.width;
    cc.irregular = c.irregular;
    cc.usable = k % 2 == 0 || (!minus && !c.irregular);
    const int idx = static_cast<int>(classes_.size());
    Mat g = c.gamma_p;
    for (i64 m = 0; m < c.width; ++m, g = g * T()) {
      Mat gamma;
      int j = group->sl2_coset(g, &gamma);
      if (coset_class_[j] >= 0) throw std::logic_error("cusp classes overlap on a coset");
      coset_class_[j] = idx;
      coset_elt_[j] = gamma;
    }
    classes_.push_back(cc);
    if (cc.usable) basis_.push_back(idx);
  }
  for (int c : coset_class_)
    if (c < 0) throw std::logic_error("coset not reached by any cusp class");
}

int BoundarySpace::classify(const Cusp& s, Mat* h) const {
  Mat g = matrix_with_first_column(s), gamma;
  int j = group_->sl2_coset(g, &gamma);
  // g = +- gamma xi_j and gamma_P T^m = +- g_j xi_j, so s = gamma g_j^{-1} gamma_P oo
  if (h) *h = gamma * coset_elt_[j].inverse();
  return coset_class_[j];
}

VkPolynomial BoundarySpace::eval(int cls, const Cusp& s) const {
  Mat h;
  if (classify(s, &h) != cls) return VkPolynomial(k_);
  return vk_act(VkPolynomial::monomial(k_, k_ - 2), (h * classes_[cls].gamma_p).inverse());
}

VkPolynomial BoundarySpace::eval(const RatVec& coeffs, const Cusp& s) const {
  if (coeffs.size() != basis_.size()) throw std::invalid_argument("boundary coefficient vector has wrong length");
  Mat h;
  int c = classify(s, &h);
  VkPolynomial out(k_);
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (basis_[b] == c && coeffs[b] != 0)
      out += vk_act(VkPolynomial::monomial(k_, k_ - 2), (h * classes_[c].gamma_p).inverse()) * coeffs[b];
  return out;
}

ModSym BoundarySpace::embed(const ModSymSpace::Ptr& space, const RatVec& coeffs) const {
  if (space->group() != group_ || space->k() != k_) throw std::invalid_argument("boundary space and symbol space differ");
  std::vector<VkPolynomial> m;
  for (const Mat& xi : group_->sl2_reps())
    m.push_back(eval(coeffs, act(xi, Cusp::infinity())) - eval(coeffs, act(xi, Cusp::make(0, 1))));
  return space->from_values(std::move(m));
}

}  // namespace msym
