#include "artifact/rational.hpp"

#include <mutex>
#include <stdexcept>

namespace msym {

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rat rpow(const Rat& x, long e) {
  if (e < 0) return 1 / rpow(x, -e);
  Rat r = 1, b = x;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat bernoulli_number(unsigned h) {
  static std::mutex mu;
  static std::vector<Rat> cache{Rat(1)};
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j<=m} C(m+1,j) B_j = 0
  while (cache.size() <= h) {
    unsigned m = cache.size();
    Rat s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * cache[j];
    Rat b = -s / Rat(m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return cache[h];
}

Rat bernoulli_poly(unsigned h, const Rat& x) {
  Rat r = 0, xp = 1;
  for (unsigned i = 0; i <= h; ++i) {
    r += Rat(binomial(h, h - i)) * bernoulli_number(h - i) * xp;
    xp *= x;
  }
  return r;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RatVec>& cols, std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Rat& a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(l, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  RationalMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

RatVec RationalMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  RatVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) r[i] += (*this)(i, j) * v[j];
  return r;
}

RatVec RationalMatrix::row(std::size_t i) const {
  return RatVec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

RatVec RationalMatrix::col(std::size_t j) const {
  RatVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

void RationalMatrix::append_row(const RatVec& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  e_.insert(e_.end(), r.begin(), r.end());
  ++rows_;
}

Rref rref(RationalMatrix m) {
  Rref out;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = R;
    for (std::size_t i = r; i < R; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = c; j < C; ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < C; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<RatVec> kernel_basis(const RationalMatrix& m) {
  Rref r = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(C);
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(const RationalMatrix& a, const RatVec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.m(i, a.cols());
  return x;
}

RatVec charpoly(const RationalMatrix& a) {
  // Faddeev-LeVerrier
  const std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("charpoly of non-square matrix");
  RatVec c(n + 1);
  c[n] = 1;
  RationalMatrix M(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix AM = a * M;
    for (std::size_t i = 0; i < n; ++i) AM(i, i) += c[n - k + 1];
    M = AM;
    RationalMatrix AMk = a * M;
    Rat tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AMk(i, i);
    c[n - k] = -tr / Rat(static_cast<long>(k));
  }
  return c;
}

}  // namespace msym
