#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace colorlie {

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT: implicit, used as a literal scalar
  Rational(long v) : value_(v) {}  // NOLINT
  Rational(const mpz_class& v) : value_(v) {}  // NOLINT
  /// Throws std::domain_error("division by zero") when den == 0.
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  /// Parses "INT" or "INT/INT".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational inverse() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const { return value_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace colorlie

namespace Eigen {
template <>
struct NumTraits<colorlie::Rational> : GenericNumTraits<colorlie::Rational> {
  using Real = colorlie::Rational;
  using NonInteger = colorlie::Rational;
  using Nested = colorlie::Rational;
  using Literal = colorlie::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 50
  };
};
}  // namespace Eigen
