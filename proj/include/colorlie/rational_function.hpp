#pragma once

#include <Eigen/Core>
#include <optional>
#include <ostream>
#include <string>

#include "colorlie/polynomial.hpp"
#include "colorlie/rational.hpp"

namespace colorlie {

/// Element of Q(t): num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(int c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  /// Throws std::domain_error("division by zero") when den is the zero polynomial.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  /// The distinguished parameter symbol t.
  static RationalFunction parameter() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The constant value, if this function does not depend on t.
  std::optional<Rational> constant() const;

  /// Substitutes t = x. Throws std::domain_error at a pole.
  Rational evaluate(const Rational& x) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace colorlie

namespace Eigen {
template <>
struct NumTraits<colorlie::RationalFunction> : GenericNumTraits<colorlie::RationalFunction> {
  using Real = colorlie::RationalFunction;
  using NonInteger = colorlie::RationalFunction;
  using Nested = colorlie::RationalFunction;
  using Literal = colorlie::RationalFunction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 200
  };
};
}  // namespace Eigen
