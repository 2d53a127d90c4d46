#include "shiftlap/rational.hpp"

#include <stdexcept>

namespace shiftlap {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const std::string text(s);
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class num(text, 10);
      return Rational(mpq_class(num));
    }
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den(text.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in rational literal");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + text);
  }
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::int_pow(long long base, unsigned exp) {
  mpz_class b(static_cast<long>(base));
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return Rational(mpq_class(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace shiftlap
