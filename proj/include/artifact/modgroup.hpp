#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "artifact/rational.hpp"

namespace msym {

using i64 = std::int64_t;

i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);
i64 gcd64(i64 a, i64 b);
i64 mod(i64 a, i64 n);
i64 inverse_mod(i64 a, i64 n);
i64 floor_div(i64 a, i64 b);

// point p/q of P^1(Q); infinity is 1/0
struct Cusp {
  i64 p = 1, q = 0;

  static Cusp make(i64 p, i64 q);
  static Cusp infinity() { return Cusp{1, 0}; }
  static Cusp from_rational(const Rat& r);
  static Cusp parse(const std::string& s);
  bool is_infinity() const { return q == 0; }
  Rat value() const;
  std::string str() const;
  bool operator==(const Cusp& o) const { return p == o.p && q == o.q; }
  bool operator!=(const Cusp& o) const { return !(*this == o); }
  bool operator<(const Cusp& o) const { return p != o.p ? p < o.p : q < o.q; }
};

struct Mat {
  i64 a = 1, b = 0, c = 0, d = 1;

  i64 det() const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const { return Mat{-a, -b, -c, -d}; }
  bool operator==(const Mat& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const;
  // det * inverse
  Mat adjugate() const { return Mat{d, -b, -c, a}; }
  Mat inverse() const;  // requires det = +-1
  Mat pow(int e) const;
  bool pm_equal(const Mat& o) const { return *this == o || *this == -o; }
  bool is_pm_identity() const;
  std::array<i64, 4> arr() const { return {a, b, c, d}; }
  std::string str() const;
};

Mat identity();
Mat sigma();
Mat tau();
Mat T();
Mat epsilon();
Mat matrix_with_first_column(const Cusp& c);  // some g in SL2(Z) with g*oo = c

Cusp act(const Mat& g, const Cusp& c);
Rat act_rational(const Mat& g, const Rat& x);  // g x for finite x with finite image

struct ContinuedFraction {
  std::vector<i64> a;  // partial quotients a_0..a_n
  std::vector<i64> p;  // p_{-2}, p_{-1}, p_0..p_n
  std::vector<i64> q;
  i64 P(int j) const { return p[j + 2]; }
  i64 Q(int j) const { return q[j + 2]; }
  int n() const { return static_cast<int>(a.size()) - 1; }
};

ContinuedFraction continued_fraction(const Cusp& r);

struct CfDecomposition {
  std::vector<Mat> tau;  // tau_{-1}, tau_0, ..., tau_n
  RatVec a;              // a_0, ..., a_{n+1} (a_{n+1} = -q_{n-1}/q_n)
  const Mat& tau_at(int j) const { return tau[j + 1]; }
};

CfDecomposition cf_decompose(const Cusp& r);

// unimodular path: {oo, r} = sum_j g_j {0, oo}, det g_j = 1
std::vector<Mat> unimodular_path(const Cusp& r);

enum class BaseKind { ModSym, InfShift };

// coef * g * (base symbol); ModSym = {oo,0}, InfShift(m) = [0,m]_oo
struct BaseTerm {
  Mat g;
  int coef;
  BaseKind kind;
  Rat shift;
};

std::vector<BaseTerm> manin_path_infty(const Cusp& r);

struct StevensSplit {
  bool upper = false;  // c == 0
  Rat shift;           // -b/a (c == 0) or a/c
  Cusp cusp;           // -d/c
  Mat outer;           // gamma^{-1}
};

StevensSplit stevens_split(const Mat& g);

// formal path in Xi_0: list of (start, end) infinitesimal points pi_r(s)
struct InfPoint {
  Cusp base, dir;
  bool operator==(const InfPoint& o) const { return base == o.base && dir == o.dir; }
};
struct XiSegment {
  int coef;
  InfPoint from, to;
};
std::vector<XiSegment> expand_base_terms(const std::vector<BaseTerm>& terms);

}  // namespace msym
