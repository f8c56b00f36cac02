#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colorlie/polynomial.hpp"

namespace colorlie {

/// Generating function num(z)/den(z) with integer coefficients, in canonical
/// form: gcd(num, den) = 1, den(0) = 1.
class RationalSeries {
 public:
  /// Throws std::domain_error if den(0) == 0 (not a power series) and
  /// std::invalid_argument if the canonical form has non-integer coefficients.
  RationalSeries(const Polynomial& num, const Polynomial& den);
  explicit RationalSeries(const Polynomial& num) : RationalSeries(num, Polynomial(1)) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_polynomial() const { return den_ == Polynomial(1); }

  /// Taylor coefficients of degrees 0..max_degree.
  std::vector<std::int64_t> expand(int max_degree) const;

  /// "num/den" in ascending powers of z, e.g. "(1+z)/(1-z^3)".
  std::string to_string() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// (1+z)^(n-q) / (1-z)^q.
RationalSeries abelian_closed_form(int n, int q);

/// Minimal linear recurrence (Berlekamp-Massey over Q). The order r is the
/// degree of the recurrence (the denominator), so finitely supported input
/// has r = 0. It is accepted only if confirmed on at least 2r+5 terms after
/// the ones needed to determine it; otherwise the result is inconclusive
/// (nullopt). Throws std::invalid_argument for fewer than 12 terms.
std::optional<RationalSeries> recognize(std::span<const std::int64_t> seq);

/// 1 - z^k and 1 + z style helpers for building expected series.
Polynomial one_plus_z();
Polynomial one_minus_z_pow(int k);
Polynomial z_pow(int k);

}  // namespace colorlie
