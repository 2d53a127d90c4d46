#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shiftlap {

// Exact rational scalar. Canonical form: denominator > 0, gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}  // NOLINT: implicit on purpose
  Rational(long long num, long long den);
  explicit Rational(mpq_class q);

  // Parses "p" or "p/q" with optional leading '-'.
  static Rational from_string(std::string_view s);

  // Renders "p" when the denominator is 1, else "p/q".
  std::string str() const;

  // Exact integer power base^exp, exp >= 0.
  static Rational int_pow(long long base, unsigned exp);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

}  // namespace shiftlap
