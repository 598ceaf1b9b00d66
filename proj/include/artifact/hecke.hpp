#pragma once

#include <utility>
#include <vector>

#include "artifact/farey.hpp"
#include "artifact/modsym.hpp"
#include "artifact/pairing.hpp"

namespace msym {

// double coset Gamma1 alpha Gamma2 = disjoint union of Gamma1 alpha xi, xi over
// representatives of (Gamma2 cap alpha^{-1} Gamma1 alpha) \ Gamma2
class HeckeContext {
 public:
  HeckeContext(FareyGroup::Ptr source, FareyGroup::Ptr target, const Mat& alpha);

  const FareyGroup::Ptr& source() const { return source_; }
  const FareyGroup::Ptr& target() const { return target_; }
  const Mat& alpha() const { return alpha_; }
  const std::vector<Mat>& reps() const { return inter_->reps(); }
  std::size_t degree() const { return reps().size(); }

  // Phi|[G1 alpha G2] = sum_xi Phi|alpha xi, as an element of `space` (a symbol space of the target)
  ModSym apply(const ModSym& phi, const ModSymSpace::Ptr& space) const;
  // (c|[G1 alpha G2])(gamma) = sum_xi c(gamma_xi)|alpha xi' with alpha xi gamma = gamma_xi alpha xi'
  Cocycle apply(Cocycle c) const;

 private:
  FareyGroup::Ptr source_, target_, inter_;
  Mat alpha_;
};

// T_ell on Gamma: alpha = diag(1, ell), and its adjoint double coset alpha* = diag(ell, 1)
HeckeContext hecke_operator(const FareyGroup::Ptr& g, i64 ell);
HeckeContext hecke_adjoint(const FareyGroup::Ptr& g, i64 ell);

// matrix on coordinates of `space` (column b is the image of basis element b)
RationalMatrix hecke_matrix(const HeckeContext& h, const ModSymSpace::Ptr& space);
// coordinates of a subspace (columns of `sub`) are mapped into the subspace: returns the matrix there
// or throws std::logic_error if the image leaves it
RationalMatrix restrict_to_subspace(const RationalMatrix& m, const std::vector<RatVec>& sub);

// ({c1|[G1 alpha G2], phi2}_{G2}, {c1, phi2|[G2 alpha* G1]}_{G1})
std::pair<Rat, Rat> hecke_adjoint_check(const HeckeContext& h, const HeckeContext& h_star, const Cocycle& c1,
                                        const ModSym& phi2, const ModSymSpace::Ptr& source_space);

}  // namespace msym
