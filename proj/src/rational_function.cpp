#include "colorlie/rational_function.hpp"

#include <stdexcept>

namespace colorlie {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Polynomial scale(lead.inverse());
    num_ *= scale;
    den_ *= scale;
  }
}

std::optional<Rational> RationalFunction::constant() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0);
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d.is_zero()) throw std::domain_error("division by zero: pole at t = " + x.to_string());
  return num_.evaluate(x) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  const Polynomial num = num_ * o.den_;
  den_ = den_ * o.num_;
  num_ = num;
  normalize();
  return *this;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string("t");
  const auto wrap = [](const Polynomial& p) {
    const std::string s = p.to_string("t");
    const bool atomic = p.coeffs().size() <= 1 ||
                        (p.degree() >= 1 && s.find_first_of("+-", 1) == std::string::npos);
    return atomic ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace colorlie
