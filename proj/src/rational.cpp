#include "colorlie/rational.hpp"

#include <stdexcept>

namespace colorlie {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("division by zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s, 10));
    return Rational(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace colorlie
