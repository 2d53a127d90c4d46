#include "shiftlap/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace shiftlap {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

void RationalMatrix::scale(const Rational& s) {
  for (auto& v : a_) v *= s;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

RationalMatrix matadd(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("matadd: shapes differ");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

namespace {

// Pivot preference: fewest GMP limbs, to limit coefficient growth.
std::size_t entry_weight(const Rational& v) {
  return mpz_size(v.numerator().get_mpz_t()) + mpz_size(v.denominator().get_mpz_t());
}

}  // namespace

std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionError("solve_linear: matrix not square");
  if (b.size() != n) throw DimensionError("solve_linear: rhs length mismatch");

  RationalMatrix m(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, n) = b[i];
  }
  std::vector<std::size_t> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = i;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    std::size_t best_w = 0;
    for (std::size_t r = col; r < n; ++r) {
      const Rational& v = m.at(row[r], col);
      if (v.is_zero()) continue;
      const std::size_t w = entry_weight(v);
      if (best == n || w < best_w) {
        best = r;
        best_w = w;
      }
    }
    if (best == n) throw SingularSystemError("solve_linear: singular system");
    std::swap(row[col], row[best]);
    const std::size_t pr = row[col];
    const Rational pivot = m.at(pr, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::size_t rr = row[r];
      if (m.at(rr, col).is_zero()) continue;
      const Rational f = m.at(rr, col) / pivot;
      m.at(rr, col) = Rational(0);
      for (std::size_t j = col + 1; j <= n; ++j) {
        if (m.at(pr, j).is_zero()) continue;
        m.at(rr, j) -= f * m.at(pr, j);
      }
    }
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = m.at(row[i], n);
    for (std::size_t j = i + 1; j < n; ++j) s -= m.at(row[i], j) * x[j];
    x[i] = s / m.at(row[i], i);
  }
  return x;
}

std::size_t rank(RationalMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t best = rows;
    std::size_t best_w = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const std::size_t w = entry_weight(a.at(i, col));
      if (best == rows || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(a.at(r, j), a.at(best, j));
    const Rational pivot = a.at(r, col);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a.at(i, col).is_zero()) continue;
      const Rational f = a.at(i, col) / pivot;
      a.at(i, col) = Rational(0);
      for (std::size_t j = col + 1; j < cols; ++j) {
        if (a.at(r, j).is_zero()) continue;
        a.at(i, j) -= f * a.at(r, j);
      }
    }
    ++r;
  }
  return r;
}

std::size_t rank_mod_prime(const std::vector<long long>& flat, std::size_t rows,
                           std::size_t cols, unsigned long long p) {
  if (flat.size() != rows * cols) throw DimensionError("rank_mod_prime: size mismatch");
  std::vector<std::uint64_t> m(rows * cols);
  for (std::size_t i = 0; i < flat.size(); ++i) {
    long long v = flat[i] % static_cast<long long>(p);
    if (v < 0) v += static_cast<long long>(p);
    m[i] = static_cast<std::uint64_t>(v);
  }
  const auto mulmod = [p](std::uint64_t x, std::uint64_t y) -> std::uint64_t {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p);
  };
  const auto powmod = [&](std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return r;
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i * cols + col] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(m[r * cols + j], m[piv * cols + j]);
    const std::uint64_t inv = powmod(m[r * cols + col], p - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t v = m[i * cols + col];
      if (v == 0) continue;
      const std::uint64_t f = mulmod(v, inv);
      m[i * cols + col] = 0;
      for (std::size_t j = col + 1; j < cols; ++j) {
        const std::uint64_t s = m[r * cols + j];
        if (s == 0) continue;
        std::uint64_t t = m[i * cols + j] + p - mulmod(f, s);
        if (t >= p) t -= p;
        m[i * cols + j] = t;
      }
    }
    ++r;
  }
  return r;
}

std::vector<double> solve_linear_double(std::vector<double> a, std::size_t n,
                                        std::vector<double> b) {
  if (a.size() != n * n || b.size() != n)
    throw DimensionError("solve_linear_double: size mismatch");
  std::vector<std::size_t> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_abs = std::fabs(a[row[col] * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::fabs(a[row[r] * n + col]);
      if (v > best_abs) {
        best = r;
        best_abs = v;
      }
    }
    if (best_abs == 0.0) throw SingularSystemError("solve_linear_double: singular system");
    std::swap(row[col], row[best]);
    const std::size_t pr = row[col];
    const double pivot = a[pr * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::size_t rr = row[r];
      const double f = a[rr * n + col] / pivot;
      if (f == 0.0) continue;
      a[rr * n + col] = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) a[rr * n + j] -= f * a[pr * n + j];
      b[rr] -= f * b[pr];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[row[i]];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[row[i] * n + j] * x[j];
    x[i] = s / a[row[i] * n + i];
  }
  return x;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += a[i] * b[i];
  }
  return s;
}

}  // namespace shiftlap
