#pragma once

#include <cstdint>
#include <vector>

#include "shiftlap/errors.hpp"
#include "shiftlap/rational.hpp"

namespace shiftlap {

// Dense rational matrix. Row-major, sizes fixed at construction.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  void scale(const Rational& s);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix matadd(const RationalMatrix& a, const RationalMatrix& b);

// Exact solution of A x = b for square nonsingular A.
// Throws DimensionError on shape mismatch, SingularSystemError on a singular system.
std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

// Exact rank over the rationals.
std::size_t rank(RationalMatrix a);

// Rank of an integer matrix over Z/p.  A value of n here certifies rank >= n over
// the rationals, which is what the structural checks combine with an explicit
// kernel vector; full rational elimination is not feasible at the larger sizes.
std::size_t rank_mod_prime(const std::vector<long long>& flat, std::size_t rows,
                           std::size_t cols, unsigned long long p);

// 64-bit float Gaussian elimination with partial pivoting (row-major square A).
std::vector<double> solve_linear_double(std::vector<double> a, std::size_t n,
                                        std::vector<double> b);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace shiftlap
