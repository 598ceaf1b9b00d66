#pragma once

#include <json.hpp>

#include "artifact/eisenstein.hpp"
#include "artifact/farey.hpp"
#include "artifact/modgroup.hpp"
#include "artifact/orbits.hpp"
#include "artifact/polyspace.hpp"
#include "artifact/qexp.hpp"
#include "artifact/rational.hpp"

namespace msym {

using json = nlohmann::ordered_json;

// rationals as "num/den" ("num" when den = 1)
json to_json(const Rat& x);
json to_json(const RatVec& v);
json to_json(const Cusp& c);
json to_json(const Mat& m);
json to_json(const VkPolynomial& p);
json to_json(const FareySymbol& s);
json to_json(const TorsionFunction& f);
json to_json(const RationalMatrix& m);
json to_json(const OrbitTriple& t);
// reduced modulo the cyclotomic polynomial: {"N": N, "coeffs": [...]} on 1, zeta, ..., zeta^{phi(N)-1}
json to_json(const Cyclo& c);
json to_json(const QExpansion& q);

Rat rat_from_json(const json& j);
TorsionFunction torsion_function_from_json(const json& j);
FareySymbol farey_from_json(const json& j);

}  // namespace msym
