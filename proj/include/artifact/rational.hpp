#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace msym {

using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

std::string to_string(const Rat& x);
Rat parse_rational(const std::string& s);

Rat bernoulli_number(unsigned h);
Rat bernoulli_poly(unsigned h, const Rat& x);
Int binomial(long n, long k);
Rat rpow(const Rat& x, long e);

// dense row-major matrix over Q
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(const std::vector<RatVec>& cols, std::size_t rows);
  static RationalMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  bool operator==(const RationalMatrix& o) const;
  RatVec apply(const RatVec& v) const;
  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;
  RationalMatrix transpose() const;
  bool is_zero() const;

  void append_row(const RatVec& r);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

struct Rref {
  RationalMatrix m;
  std::vector<std::size_t> pivots;
};

Rref rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
// basis of {v : M v = 0}; vector i has a 1 at the i-th free column and 0 at the others
std::vector<RatVec> kernel_basis(const RationalMatrix& m);
std::optional<RatVec> solve(const RationalMatrix& a, const RatVec& b);
// coefficients c_0..c_n of det(xI - A), c_n = 1
RatVec charpoly(const RationalMatrix& a);

}  // namespace msym
