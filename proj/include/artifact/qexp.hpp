#pragma once

#include <vector>

#include "artifact/eisenstein.hpp"
#include "artifact/rational.hpp"

namespace msym {

// sum_a g(a) beta_h(a): L(1-h, g) for h > 1, L(0, g) + g(0)/2 for h = 1
Rat l_special(const RatVec& g, int h);
Cyclo l_special(const std::vector<Cyclo>& g, int h);

// constant + sum_{n >= 1} coeffs[n] q_N^n, coeffs[0] unused
struct QExpansion {
  i64 level = 1;
  int weight = 2;
  std::size_t n_terms = 0;
  Cyclo constant;
  std::vector<Cyclo> coeffs;
};

// C_{N,k}^{-1} E_{k,f}: constant L(1-k, P_2(f)(0,.)^-) and
// q_N^t coefficient sum_{nm = t} (P_2(f)(n,-m) + (-1)^k P_2(f^-)(n,-m)) m^{k-1}
QExpansion eis_qexp(const CycloFunction& f, int k, std::size_t n_terms);
inline QExpansion eis_qexp(const TorsionFunction& f, int k, std::size_t n_terms) {
  return eis_qexp(CycloFunction::from(f), k, n_terms);
}

// M_{N^{-1} f^}(j+1) = (-1)^{j+1} int f^- dbeta_{k-1-j} dbeta_{j+1}, 0 < j < k-2
Rat mellin_rational(const TorsionFunction& f, int k, int j);

}  // namespace msym
