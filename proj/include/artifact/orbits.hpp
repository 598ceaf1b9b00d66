#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "artifact/eisenstein.hpp"
#include "artifact/modgroup.hpp"

namespace msym {

// Gamma0(N)-orbit [q1, q2, u] on (Z/NZ)^2; u is taken mod gcd(N/q1, q1/q2), 0 when that is 1
struct OrbitTriple {
  i64 q1 = 1, q2 = 1, u = 0;

  auto operator<=>(const OrbitTriple&) const = default;
  std::string str() const;
};

using OrbitCombination = std::map<OrbitTriple, Rat>;

i64 orbit_modulus(i64 N, i64 q1, i64 q2);
OrbitTriple orbit_of(i64 x, i64 y, i64 N);
i64 orbit_card(const OrbitTriple& t, i64 N);
// every orbit, sorted
std::vector<OrbitTriple> all_orbits(i64 N);
// a point (x, y) in the orbit, namely (q1, q2 v) with v = u mod gcd
std::pair<i64, i64> representative(const OrbitTriple& t, i64 N);
std::vector<std::pair<i64, i64>> orbit_points(const OrbitTriple& t, i64 N);
TorsionFunction orbit_indicator(const OrbitTriple& t, i64 N);
TorsionFunction combination_function(const OrbitCombination& c, i64 N);

std::vector<OrbitTriple> basis_v(i64 N, int k);
bool member_basis(const OrbitTriple& t, i64 N);
// M(q1, q2) = q2 ((N/q1) / gcd(N/q1, q1/q2))^2
i64 descent_measure(const OrbitTriple& t, i64 N);
// expresses [t] through basis triples modulo the distribution relations with weight W = k-2;
// throws std::logic_error if a step fails to lower M(q1,q2)
OrbitCombination reduce_orbit(const OrbitTriple& t, i64 N, int W);
OrbitTriple cusp_to_basis(const Cusp& r, i64 N);

}  // namespace msym
