#include "delbound/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace delbound {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) throw std::domain_error("Rational::from_double: non-finite value");
  return Rational(mpq_class(v));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    return Rational(BigInt(std::string(text.substr(0, slash))),
                    BigInt(std::string(text.substr(slash + 1))));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::string to_string(const BigInt& v) { return v.get_str(); }

double to_double(const BigInt& v) { return v.get_d(); }

}  // namespace delbound
