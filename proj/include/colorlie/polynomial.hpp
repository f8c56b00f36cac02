#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colorlie/rational.hpp"

namespace colorlie {

/// Dense univariate polynomial over Q, coefficients in ascending order with
/// no trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rational coeff(int i) const;
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Rendering options. `times` is placed between a coefficient and the
  /// variable ("2*t" vs "2z").
  std::string to_string(std::string_view var = "t", bool ascending = false,
                        std::string_view times = "*") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial pow(const Polynomial& p, int e);

}  // namespace colorlie
