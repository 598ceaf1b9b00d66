#include "artifact/hecke.hpp"

#include <optional>
#include <stdexcept>

namespace msym {

HeckeContext::HeckeContext(FareyGroup::Ptr source, FareyGroup::Ptr target, const Mat& alpha)
    : source_(std::move(source)), target_(std::move(target)), alpha_(alpha) {
  if (alpha.det() <= 0) throw std::invalid_argument("Hecke matrix needs positive determinant");
  inter_ = FareyGroup::subgroup(target_, intersect(target_->group(), conjugate(source_->group(), alpha)));
}

ModSym HeckeContext::apply(const ModSym& phi, const ModSymSpace::Ptr& space) const {
  if (phi.space()->group() != source_) throw std::invalid_argument("symbol is not on the source group");
  if (space->group() != target_ || space->k() != phi.k()) throw std::invalid_argument("target space mismatch");
  const Cusp zero = Cusp::make(0, 1), oo = Cusp::infinity();
  std::vector<VkPolynomial> m;
  for (const Mat& xi_i : target_->sl2_reps()) {
    VkPolynomial v(phi.k());
    for (const Mat& xi : reps()) {
      const Mat g = alpha_ * xi;
      const Mat h = g * xi_i;
      v += vk_act(phi.eval_path(act(h, zero), act(h, oo)), g);
    }
    m.push_back(std::move(v));
  }
  return space->from_values(std::move(m));
}

Cocycle HeckeContext::apply(Cocycle c) const {
  const auto self = *this;
  return [self, c = std::move(c)](const Mat& gamma) {
    const Mat& a = self.alpha_;
    const Mat a_adj = a.adjugate();
    const i64 D = a.det();
    std::optional<VkPolynomial> out;
    for (const Mat& xi : self.reps()) {
      const Mat g = xi * gamma;
      const Word w = self.inter_->decompose(g);
      Mat xi2 = self.reps()[static_cast<std::size_t>(w.coset)];
      Mat h = g * xi2.inverse();
      if (!self.inter_->group().member(h)) {
        h = -h;
        xi2 = -xi2;
      }
      // gamma_xi = alpha h alpha^{-1}
      Mat t = a * h * a_adj;
      const Mat gx{t.a / D, t.b / D, t.c / D, t.d / D};
      VkPolynomial term = vk_act(c(gx), a * xi2);
      if (out) *out += term;
      else out = std::move(term);
    }
    return *out;
  };
}

HeckeContext hecke_operator(const FareyGroup::Ptr& g, i64 ell) { return HeckeContext(g, g, Mat{1, 0, 0, ell}); }

HeckeContext hecke_adjoint(const FareyGroup::Ptr& g, i64 ell) { return HeckeContext(g, g, Mat{ell, 0, 0, 1}); }

RationalMatrix hecke_matrix(const HeckeContext& h, const ModSymSpace::Ptr& space) {
  if (h.source() != space->group() || h.target() != space->group()) throw std::invalid_argument("Hecke operator and space differ");
  std::vector<RatVec> cols;
  for (std::size_t b = 0; b < space->dim(); ++b) cols.push_back(space->coordinates(h.apply(space->element(b), space)));
  return RationalMatrix::from_columns(cols, space->dim());
}

RationalMatrix restrict_to_subspace(const RationalMatrix& m, const std::vector<RatVec>& sub) {
  if (sub.empty()) return RationalMatrix(0, 0);
  const std::size_t n = m.rows();
  RationalMatrix basis = RationalMatrix::from_columns(sub, n);
  std::vector<RatVec> cols;
  for (const RatVec& v : sub) {
    auto x = solve(basis, m.apply(v));
    if (!x) throw std::logic_error("subspace is not stable under the operator");
    cols.push_back(*x);
  }
  return RationalMatrix::from_columns(cols, sub.size());
}

std::pair<Rat, Rat> hecke_adjoint_check(const HeckeContext& h, const HeckeContext& h_star, const Cocycle& c1,
                                        const ModSym& phi2, const ModSymSpace::Ptr& source_space) {
  if (h_star.source() != h.target() || h_star.target() != h.source())
    throw std::invalid_argument("adjoint double coset has the wrong groups");
  const int k = phi2.k();
  PairingContext ctx2(h.target(), k), ctx1(h.source(), k);
  Rat lhs = pair(ctx2, h.apply(c1), phi2);
  Rat rhs = pair(ctx1, c1, h_star.apply(phi2, source_space));
  return {lhs, rhs};
}

}  // namespace msym
