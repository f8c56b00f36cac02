#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "colorlie/rational.hpp"
#include "colorlie/rational_function.hpp"

namespace colorlie {

/// Exact field element usable as a matrix entry or structure constant.
/// Models: Rational (Q) and RationalFunction (Q(t)).
template <class S>
concept ExactScalar = std::regular<S> && requires(const S a, const S b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
  S(0);
  S(1);
};

/// Parses the scalar grammar: integers, `t`, `t^INT`, combined with
/// `+ - * /`, parentheses and juxtaposition (`2t`). Any other identifier is
/// rejected: the field is Q(t) with a single parameter.
RationalFunction parse_scalar(std::string_view text);

/// Parses into Q; throws std::invalid_argument if the text mentions t.
Rational parse_rational(std::string_view text);

/// Converts a rational into the scalar type S.
template <ExactScalar S>
S scalar_from(const Rational& r) {
  return S(r);
}

/// Specializes a Q(t) value at t = value (throws at a pole).
inline Rational specialize(const RationalFunction& f, const Rational& value) { return f.evaluate(value); }
inline Rational specialize(const Rational& r, const Rational&) { return r; }

}  // namespace colorlie
