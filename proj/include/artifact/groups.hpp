#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artifact/modgroup.hpp"

namespace msym {

using CosetKey = std::vector<i64>;

// finite-index subgroup of SL2(Z) given by a membership test; the optional key
// is a complete invariant of the coset +-Gamma g, letting lookups avoid scans
struct Subgroup {
  std::string name;
  std::function<bool(const Mat&)> member;
  std::function<CosetKey(const Mat&)> key;  // may be empty
  bool contains_minus_identity = true;
  i64 level = 1;
};

Subgroup full_modular_group();
Subgroup gamma0(i64 N);
Subgroup gamma1(i64 N);
Subgroup gamma_full(i64 N);
// alpha^{-1} Gamma alpha intersected with SL2(Z)
Subgroup conjugate(const Subgroup& g, const Mat& alpha);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup make_group(const std::string& kind, i64 N);

// classical formulas, used as independent oracles
struct ClassicalInvariants {
  i64 index;  // in PSL2(Z)
  i64 cusps;
  i64 nu2;
  i64 nu3;
  i64 genus;
};
ClassicalInvariants classical_gamma0(i64 N);
ClassicalInvariants classical_gamma1(i64 N);
ClassicalInvariants classical_gamma(i64 N);
// dim S_k(Gamma0(N)) for k >= 2 even
i64 classical_dim_cusp_forms_gamma0(i64 N, int k);
i64 euler_phi(i64 n);
std::vector<i64> divisors(i64 n);
std::vector<i64> prime_factors(i64 n);

}  // namespace msym
