#include "artifact/modgroup.hpp"

#include <stdexcept>

namespace msym {

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in matrix arithmetic");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in matrix arithmetic");
  return r;
}

i64 gcd64(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 mod(i64 a, i64 n) {
  i64 r = a % n;
  return r < 0 ? r + n : r;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

i64 inverse_mod(i64 a, i64 n) {
  if (n == 1) return 0;
  i64 t = 0, nt = 1, r = n, nr = mod(a, n);
  while (nr) {
    i64 q = r / nr;
    i64 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible modulo n");
  return mod(t, n);
}

Cusp Cusp::make(i64 p, i64 q) {
  if (p == 0 && q == 0) throw std::invalid_argument("cusp 0/0");
  if (q == 0) return infinity();
  i64 g = gcd64(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Cusp{p, q};
}

Cusp Cusp::from_rational(const Rat& r) {
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p()) throw std::overflow_error("cusp too large");
  return make(r.get_num().get_si(), r.get_den().get_si());
}

Cusp Cusp::parse(const std::string& s) {
  if (s == "oo" || s == "inf" || s == "1/0") return infinity();
  auto pos = s.find('/');
  if (pos == std::string::npos) return make(std::stoll(s), 1);
  return make(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 1)));
}

Rat Cusp::value() const {
  if (q == 0) throw std::domain_error("value of cusp at infinity");
  Rat r(Int(static_cast<long>(p)), Int(static_cast<long>(q)));
  r.canonicalize();
  return r;
}

std::string Cusp::str() const { return std::to_string(p) + "/" + std::to_string(q); }

i64 Mat::det() const { return checked_add(checked_mul(a, d), -checked_mul(b, c)); }

Mat Mat::operator*(const Mat& o) const {
  return Mat{checked_add(checked_mul(a, o.a), checked_mul(b, o.c)), checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
             checked_add(checked_mul(c, o.a), checked_mul(d, o.c)), checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

bool Mat::operator<(const Mat& o) const { return arr() < o.arr(); }

Mat Mat::inverse() const {
  i64 D = det();
  if (D == 1) return adjugate();
  if (D == -1) return -adjugate();
  throw std::domain_error("matrix not invertible over Z");
}

Mat Mat::pow(int e) const {
  Mat base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  Mat r = identity();
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool Mat::is_pm_identity() const { return b == 0 && c == 0 && ((a == 1 && d == 1) || (a == -1 && d == -1)); }

std::string Mat::str() const {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) + "]";
}

Mat identity() { return Mat{1, 0, 0, 1}; }
Mat sigma() { return Mat{0, -1, 1, 0}; }
Mat tau() { return Mat{0, -1, 1, -1}; }
Mat T() { return Mat{1, 1, 0, 1}; }
Mat epsilon() { return Mat{-1, 0, 0, 1}; }

Mat matrix_with_first_column(const Cusp& c) {
  if (c.is_infinity()) return identity();
  i64 p = c.p, q = c.q;
  i64 old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r) {
    i64 k = old_r / r;
    i64 tmp = old_r - k * r;
    old_r = r;
    r = tmp;
    tmp = old_s - k * s;
    old_s = s;
    s = tmp;
    tmp = old_t - k * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_s = -old_s;
    old_t = -old_t;
  }
  // p*u + q*v = 1
  Mat g{p, -old_t, q, old_s};
  if (g.det() != 1) throw std::logic_error("bezout completion failed");
  return g;
}

Cusp act(const Mat& g, const Cusp& c) {
  return Cusp::make(checked_add(checked_mul(g.a, c.p), checked_mul(g.b, c.q)),
                    checked_add(checked_mul(g.c, c.p), checked_mul(g.d, c.q)));
}

Rat act_rational(const Mat& g, const Rat& x) {
  Rat den = Rat(static_cast<long>(g.c)) * x + Rat(static_cast<long>(g.d));
  if (den == 0) throw std::domain_error("image is infinity");
  return (Rat(static_cast<long>(g.a)) * x + Rat(static_cast<long>(g.b))) / den;
}

ContinuedFraction continued_fraction(const Cusp& r) {
  if (r.is_infinity()) throw std::domain_error("continued fraction of infinity");
  ContinuedFraction cf;
  cf.p = {0, 1};
  cf.q = {1, 0};
  i64 num = r.p, den = r.q;
  while (true) {
    i64 ai = floor_div(num, den);
    cf.a.push_back(ai);
    std::size_t m = cf.p.size();
    cf.p.push_back(checked_add(checked_mul(ai, cf.p[m - 1]), cf.p[m - 2]));
    cf.q.push_back(checked_add(checked_mul(ai, cf.q[m - 1]), cf.q[m - 2]));
    i64 rem = num - ai * den;
    if (rem == 0) break;
    num = den;
    den = rem;
  }
  return cf;
}

CfDecomposition cf_decompose(const Cusp& r) {
  ContinuedFraction cf = continued_fraction(r);
  CfDecomposition out;
  const int n = cf.n();
  for (int j = -1; j <= n; ++j) {
    i64 s = ((j - 1) % 2 == 0) ? 1 : -1;
    out.tau.push_back(Mat{s * cf.P(j), cf.P(j - 1), s * cf.Q(j), cf.Q(j - 1)});
  }
  for (int j = 0; j <= n; ++j) out.a.push_back(Rat(static_cast<long>(cf.a[j])));
  Rat last(Int(static_cast<long>(-cf.Q(n - 1))), Int(static_cast<long>(cf.Q(n))));
  last.canonicalize();
  out.a.push_back(last);
  return out;
}

std::vector<Mat> unimodular_path(const Cusp& r) {
  std::vector<Mat> out;
  if (r.is_infinity()) return out;
  ContinuedFraction cf = continued_fraction(r);
  for (int j = 0; j <= cf.n(); ++j) {
    Mat g{cf.P(j), cf.P(j - 1), cf.Q(j), cf.Q(j - 1)};
    if (g.det() == -1) {
      g.b = -g.b;
      g.d = -g.d;
    }
    out.push_back(g);
  }
  return out;
}

std::vector<BaseTerm> manin_path_infty(const Cusp& r) {
  if (r.is_infinity()) throw std::domain_error("manin path to infinity");
  CfDecomposition dec = cf_decompose(r);
  std::vector<BaseTerm> out;
  const int n = static_cast<int>(dec.a.size()) - 2;
  if (dec.a[0] != 0) out.push_back({identity(), 1, BaseKind::InfShift, dec.a[0]});
  for (int j = 0; j <= n; ++j) {
    const Mat& t = dec.tau_at(j);
    Rat s = (j % 2 == 0) ? Rat(-dec.a[j + 1]) : dec.a[j + 1];
    // [pi_0(oo), pi_oo(s)] = -{oo,0} + [0,s]_oo
    out.push_back({t, -1, BaseKind::ModSym, Rat(0)});
    if (s != 0) out.push_back({t, 1, BaseKind::InfShift, s});
  }
  return out;
}

StevensSplit stevens_split(const Mat& g) {
  if (g.det() != 1) throw std::domain_error("stevens_split needs det 1");
  StevensSplit s;
  s.outer = g.inverse();
  if (g.c == 0) {
    s.upper = true;
    s.shift = Rat(Int(static_cast<long>(-g.b)), Int(static_cast<long>(g.a)));
    s.shift.canonicalize();
    return s;
  }
  s.cusp = Cusp::make(-g.d, g.c);
  s.shift = Rat(Int(static_cast<long>(g.a)), Int(static_cast<long>(g.c)));
  s.shift.canonicalize();
  return s;
}

std::vector<XiSegment> expand_base_terms(const std::vector<BaseTerm>& terms) {
  std::vector<XiSegment> out;
  for (const auto& t : terms) {
    InfPoint from{act(t.g, Cusp::infinity()), act(t.g, Cusp::make(0, 1))};
    InfPoint to;
    if (t.kind == BaseKind::ModSym)
      to = {act(t.g, Cusp::make(0, 1)), act(t.g, Cusp::infinity())};
    else
      to = {act(t.g, Cusp::infinity()), act(t.g, Cusp::from_rational(t.shift))};
    out.push_back({t.coef, from, to});
  }
  return out;
}

}  // namespace msym
