#include <vector>

#include "doctest.h"
#include "shiftlap/difference_operators.hpp"
#include "shiftlap/matrix.hpp"
#include "shiftlap/rational.hpp"
#include "shiftlap/rng.hpp"

using namespace shiftlap;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::from_string("6/9") == Rational(2, 3));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("0/5").is_zero());
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = random_small_rational(rng);
    const Rational b = random_small_rational(rng);
    CHECK((a + b) - b == a);
    CHECK(a + b == b + a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational::int_pow(3, 5) == Rational(243));
  CHECK(Rational(1) / Rational::int_pow(2, 10) == Rational(1, 1024));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational string round trip") {
  SplitMix64 rng(12);
  for (int i = 0; i < 200; ++i) {
    Rational v = random_small_rational(rng) * random_small_rational(rng);
    CHECK(Rational::from_string(v.str()) == v);
  }
}

TEST_CASE("solve_linear on pinned examples") {
  RationalMatrix id2 = RationalMatrix::identity(2);
  const auto x = solve_linear(id2, {Rational(3), Rational(1, 2)});
  CHECK(x[0] == Rational(3));
  CHECK(x[1] == Rational(1, 2));

  RationalMatrix d(2, 2);
  d.at(0, 0) = Rational(2);
  d.at(1, 1) = Rational(4);
  const auto y = solve_linear(d, {Rational(1), Rational(1)});
  CHECK(y[0] == Rational(1, 2));
  CHECK(y[1] == Rational(1, 4));
}

TEST_CASE("solve_linear inverts random systems exactly") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    RationalMatrix a(n, n);
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = random_small_rational(rng);
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) = random_small_rational(rng);
      a.at(i, i) += Rational(10);  // keeps the sample nonsingular
    }
    std::vector<Rational> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b[i] += a.at(i, j) * x[j];
    }
    const auto solved = solve_linear(a, b);
    CHECK(solved == x);
  }
}

TEST_CASE("singular and mismatched systems are told apart") {
  RationalMatrix z(2, 2);
  CHECK_THROWS_AS(solve_linear(z, {Rational(1), Rational(0)}), SingularSystemError);
  RationalMatrix id2 = RationalMatrix::identity(2);
  CHECK_THROWS_AS(solve_linear(id2, {Rational(1)}), DimensionError);
  RationalMatrix rect(2, 3);
  CHECK_THROWS_AS(solve_linear(rect, {Rational(1), Rational(0)}), DimensionError);
}

TEST_CASE("rank on pinned examples") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix(2, 2)) == 0);
  CHECK(rank(build_dense_H(Alphabet(2), 0)) == 1);
}

TEST_CASE("rank properties") {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const std::size_t m = 1 + rng.below(5);
    RationalMatrix a(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) a.at(i, j) = random_small_rational(rng);
    CHECK(rank(a) == rank(a.transpose()));

    RationalMatrix swapped = a;
    const std::size_t r1 = rng.below(n);
    const std::size_t r2 = rng.below(n);
    for (std::size_t j = 0; j < m; ++j) std::swap(swapped.at(r1, j), swapped.at(r2, j));
    CHECK(rank(swapped) == rank(a));
  }
}

TEST_CASE("rank_mod_prime agrees with exact rank on integer matrices") {
  SplitMix64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    RationalMatrix a(n, n);
    std::vector<long long> flat(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      const long long v = static_cast<long long>(rng.below(7)) - 3;
      flat[i] = v;
      a.at(i / n, i % n) = Rational(v);
    }
    CHECK(rank_mod_prime(flat, n, n, 2305843009213693951ULL) == rank(a));
  }
}

TEST_CASE("matmul and transpose basics") {
  SplitMix64 rng(16);
  RationalMatrix a(3, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) a.at(i, j) = random_small_rational(rng);
  CHECK(matmul(RationalMatrix::identity(3), a) == a);
  CHECK(a.transpose().transpose() == a);
  CHECK_THROWS_AS(matmul(a, a), DimensionError);
}

TEST_CASE("block inverse identity at N=3 level 1") {
  const DifferenceOperator op(Alphabet(3), 1);
  const BlockDecomposition d = blocks(op);
  RationalMatrix minus_g = green_matrix(op);
  minus_g.scale(Rational(-1));
  CHECK(matmul(d.X, minus_g) == RationalMatrix::identity(d.X.rows()));

  // Each column of -G solves X times column = unit column.
  const std::size_t s = d.X.rows();
  for (std::size_t c = 0; c < s; ++c) {
    std::vector<Rational> unit(s);
    unit[c] = Rational(1);
    const auto col = solve_linear(d.X, unit);
    for (std::size_t r = 0; r < s; ++r) CHECK(col[r] == minus_g.at(r, c));
  }
}

TEST_CASE("float solver solves and reports singularity") {
  std::vector<double> a = {2.0, 1.0, 1.0, 3.0};
  const auto x = solve_linear_double(a, 2, {5.0, 10.0});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(3.0));
  std::vector<double> z(4, 0.0);
  CHECK_THROWS_AS(solve_linear_double(z, 2, {1.0, 2.0}), SingularSystemError);
}
