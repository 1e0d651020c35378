#include "frobrr/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace frobrr {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz from long is exact on LP64; go through a string otherwise.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return mpz_class(static_cast<long>(v));
  } else {
    return mpz_class(std::to_string(v));
  }
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) {
    throw std::domain_error("Rational: zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
  return Rational(std::move(q));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) {
    throw std::domain_error("Rational: " + to_string() + " is not an integer");
  }
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) {
    throw std::overflow_error("Rational: " + to_string() + " out of int64 range");
  }
  return static_cast<std::int64_t>(n.get_si());
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) {
    throw std::domain_error("Rational: inverse of zero");
  }
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  value_ /= other.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace frobrr
