#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "artifact/eisenstein.hpp"
#include "artifact/farey.hpp"
#include "artifact/modsym.hpp"
#include "artifact/polyspace.hpp"
#include "artifact/rational.hpp"

namespace msym {

// gamma -> Phi~(gamma), a 1-cocycle on Gamma with values in V_k
using Cocycle = std::function<VkPolynomial(const Mat&)>;

class PairingContext {
 public:
  PairingContext(FareyGroup::Ptr group, int k);
  // pair against an explicitly supplied Farey symbol of the same group
  PairingContext(FareyGroup::Ptr group, FareySymbol symbol, int k);

  const FareyGroup::Ptr& group() const { return group_; }
  int k() const { return k_; }
  const FareySymbol& symbol() const { return symbol_; }
  const std::vector<TildeArc>& tilde() const { return tilde_; }

  // throws std::invalid_argument on a weight or group mismatch
  void check(const ModSym& phi) const;
  // Phi(a) for every tilde arc a
  std::vector<VkPolynomial> arc_values(const ModSym& phi) const;
  // c(gamma_a^{-1}) for every tilde arc a
  std::vector<VkPolynomial> cocycle_values(const Cocycle& c) const;

 private:
  FareyGroup::Ptr group_;
  FareySymbol symbol_;
  std::vector<TildeArc> tilde_;
  int k_;
};

// Phi~_r(gamma) = Phi((r, gamma^{-1} r))
Cocycle modsym_cocycle(const ModSym& phi, const Cusp& r = Cusp::infinity());
Cocycle eis_cocycle(std::shared_ptr<const EisSymbol> e);
// c + d P, with (d P)(gamma) = P|gamma - P
Cocycle add_coboundary(Cocycle c, VkPolynomial p);
// gamma -> c(eps gamma eps)|eps, a cocycle on eps Gamma eps
Cocycle epsilon_cocycle(Cocycle c);

// 1/2 sum over tilde arcs <Phi~1(gamma_a^{-1}), Phi2(a)>
Rat pair(const PairingContext& ctx, const Cocycle& c1, const ModSym& phi2);
Rat pair(const PairingContext& ctx, const ModSym& phi1, const ModSym& phi2);
// the same sum over plain arcs, elliptic-3 arcs weighted by (c(g^{-1}) + c(g^{-2}))/3
Rat pair_arcform(const PairingContext& ctx, const Cocycle& c1, const ModSym& phi2);
// endpoint form 1/2 sum (<Phi^1(d1 a*), Phi^2(d2 a*)> - <Phi^1(d2 a), Phi^2(d1 a)>), Phi^(t) = Phi((oo, t))
Rat pair_alt(const PairingContext& ctx, const ModSym& phi1, const ModSym& phi2);
// -sum_s <c(tau_s), Phi0({s})> over the cusp classes, tau_s the positive stabilizer generator
Rat pair_noncusp(const PairingContext& ctx, const Cocycle& c1, const BoundarySpace& bd, const RatVec& coeffs);
// sum_s w(s) (int f|gamma_s dbeta_k dbeta_0) c_s(Phi0)
Rat pair_eis_via_cusps(const PairingContext& ctx, const EisSymbol& e, const BoundarySpace& bd, const RatVec& coeffs);

// Phi|eps: D -> Phi(eps D)|eps, landing in the symbol space of eps Gamma eps
ModSym epsilon_conjugate(const ModSym& phi, const ModSymSpace::Ptr& target);

// (1/6) <P0|(T - T^{-1}) - 2 P1|(1 + T), Q0> with P0 = Phi1({oo,0}), P1 = Phi1([0,1]_oo), Q0 = Phi2({oo,0})
Rat haberland(const VkPolynomial& p0, const VkPolynomial& p1, const VkPolynomial& q0);
Rat haberland_pair_sl2z(const ModSym& phi1, const ModSym& phi2);
Rat haberland_pair_sl2z(const EisSymbol& e, const ModSym& phi2);
// r_j with P = sum C(k-2,j) r_j x^j y^{k-2-j}
RatVec period_moments(const VkPolynomial& p);
// lambda_{k,m} at index m = 0..k-2; odd entries are zero
RatVec lambda_coeffs(int k);

// rows[i] against cols[j]; the parallel kernel and the serial reference give identical matrices
RationalMatrix gram_matrix(const PairingContext& ctx, const std::vector<Cocycle>& rows, const std::vector<ModSym>& cols);
RationalMatrix gram_matrix_serial(const PairingContext& ctx, const std::vector<Cocycle>& rows,
                                  const std::vector<ModSym>& cols);

// Eisenstein symbols Psi_k(1_t) for t in basis_v(N, k)
std::vector<std::shared_ptr<const EisSymbol>> eisenstein_basis_symbols(i64 N, int k);
// kernel of Phi -> ({Psi_k(1_t), Phi})_t on Hom_{Gamma0(N)}(Delta_0, V_k), as coordinate vectors
std::vector<RatVec> cuspidal_subspace(const PairingContext& ctx, const ModSymSpace::Ptr& space, i64 N);

}  // namespace msym
