#pragma once

#include <string>
#include <vector>

namespace msym {

inline constexpr double kMellinTol = 1e-8;       // absolute
inline constexpr double kEulerMaclaurinTol = 1e-10;
inline constexpr double kPeriodRelationTol = 1e-8;  // relative to max |r_j|
inline constexpr double kSelfPairingTol = 1e-8;     // relative to |{Per, conj Per}|
inline constexpr double kPeterssonTol = 1e-6;       // relative

struct Residual {
  std::string name;
  double value = 0;
  double tol = 0;
  bool pass() const { return value < tol; }
};

// mellin_rational against quadrature for N in {3,4,5}, k in {4,6}; l_special against Euler-Maclaurin
std::vector<Residual> mellin_suite();
// relations among the numeric periods of Delta
std::vector<Residual> delta_suite();
// Haberland form of Per(Delta) and its conjugate against the quadrature norm
std::vector<Residual> petersson_suite();

}  // namespace msym
