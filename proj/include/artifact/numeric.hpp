#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "artifact/eisenstein.hpp"
#include "artifact/qexp.hpp"
#include "artifact/rational.hpp"

namespace msym {

using cplx = std::complex<double>;

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// zeta(s, q), 0 < q <= 1, by Euler-Maclaurin summation; the tail terminates at s = 0, -1, -2, ...
double hurwitz_zeta_em(double s, double q, int m = 4, int p = 20);
// L(1-h, g) for g on Z/NZ lifted to N, from the Hurwitz continuation
double l_value_em(const RatVec& g, int h);

// integer coefficients of Delta = q prod (1 - q^n)^24, index 0..n_terms
std::vector<Int> delta_qexp(std::size_t n_terms);

struct FloatPeriod {
  std::vector<cplx> r;  // r_0 .. r_{k-2}
  double precision = 0;
};

// r_j = int_{i oo}^0 Delta(t) t^j dt, split at i and folded with Delta(-1/t) = t^12 Delta(t)
FloatPeriod delta_periods(double precision = 1e-14);
// {Per F1, Per F2} from the period moments, Haberland form with vanishing [0,1]_oo term
cplx haberland_numeric(const std::vector<cplx>& r1, const std::vector<cplx>& r2);

// <Delta, Delta> = int_F |Delta|^2 y^12 dx dy / y^2 by tensor Gauss-Legendre quadrature on the
// standard fundamental domain; parallel over x-nodes, the serial version is the reference
double petersson_norm_delta(int x_nodes = 48, int y_panels = 24);
double petersson_norm_delta_serial(int x_nodes = 48, int y_panels = 24);

// numeric M_g(s) for the q-expansion of C^{-1} E_{k,g}, g given on (Z/NZ)^2 (complex values),
// at integer s with 0 < s < k, by exp-sinh quadrature on [1, oo) after folding with tau -> -1/tau
cplx numeric_mellin(const CycloFunction& g, int k, int s, double tol = 1e-12);

}  // namespace msym
