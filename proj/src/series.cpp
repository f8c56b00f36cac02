#include "colorlie/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorlie {

RationalSeries::RationalSeries(const Polynomial& num, const Polynomial& den) {
  if (den.coeff(0).is_zero()) throw std::domain_error("series denominator must not vanish at z = 0");
  Polynomial n = num;
  Polynomial d = den;
  const Polynomial g = gcd(n, d);
  if (g.degree() > 0) {
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  }
  const Polynomial scale(d.coeff(0).inverse());
  num_ = n * scale;
  den_ = d * scale;
  for (const auto* p : {&num_, &den_})
    for (const auto& c : p->coeffs())
      if (!c.is_integer()) throw std::invalid_argument("series has non-integer coefficients in canonical form");
}

std::vector<std::int64_t> RationalSeries::expand(int max_degree) const {
  // den(0) = 1, so a_k = num_k - sum_{i>=1} den_i a_{k-i}.
  std::vector<Rational> a;
  std::vector<std::int64_t> out;
  for (int k = 0; k <= max_degree; ++k) {
    Rational v = num_.coeff(k);
    for (int i = 1; i <= std::min(k, den_.degree()); ++i) v -= den_.coeff(i) * a[static_cast<std::size_t>(k - i)];
    a.push_back(v);
    out.push_back(v.numerator().get_si());
  }
  return out;
}

std::string RationalSeries::to_string() const {
  const auto render = [](const Polynomial& p) { return p.to_string("z", true, ""); };
  const auto wrap = [&](const Polynomial& p) {
    int terms = 0;
    for (const auto& c : p.coeffs()) terms += c.is_zero() ? 0 : 1;
    return terms > 1 ? "(" + render(p) + ")" : render(p);
  };
  if (is_polynomial()) return render(num_);
  return wrap(num_) + "/" + wrap(den_);
}

Polynomial one_plus_z() { return Polynomial(std::vector<Rational>{Rational(1), Rational(1)}); }
Polynomial one_minus_z_pow(int k) { return Polynomial(1) - Polynomial::monomial(Rational(1), k); }
Polynomial z_pow(int k) { return Polynomial::monomial(Rational(1), k); }

RationalSeries abelian_closed_form(int n, int q) {
  if (q < 0 || q > n) throw std::invalid_argument("abelian_closed_form needs 0 <= q <= n");
  return RationalSeries(pow(one_plus_z(), n - q), pow(one_minus_z_pow(1), q));
}

std::optional<RationalSeries> recognize(std::span<const std::int64_t> seq) {
  if (seq.size() < 12) throw std::invalid_argument("recognize needs at least 12 terms");
  const std::size_t len = seq.size();
  std::vector<Rational> s;
  s.reserve(len);
  for (auto v : seq) s.emplace_back(static_cast<long>(v));

  // Berlekamp-Massey: connection polynomial c with c[0] = 1.
  std::vector<Rational> c{Rational(1)}, b{Rational(1)};
  int order = 0;
  int shift = 1;
  Rational last_discrepancy(1);
  std::size_t last_change = 0;
  for (std::size_t k = 0; k < len; ++k) {
    Rational d = s[k];
    for (int i = 1; i <= order; ++i) d += c[static_cast<std::size_t>(i)] * s[k - static_cast<std::size_t>(i)];
    if (d.is_zero()) {
      ++shift;
      continue;
    }
    last_change = k;
    const Rational factor = d / last_discrepancy;
    std::vector<Rational> next = c;
    if (next.size() < b.size() + static_cast<std::size_t>(shift)) next.resize(b.size() + static_cast<std::size_t>(shift), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) next[i + static_cast<std::size_t>(shift)] -= factor * b[i];
    if (2 * order <= static_cast<int>(k)) {
      order = static_cast<int>(k) + 1 - order;
      b = c;
      last_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }

  const Polynomial den(c);
  const auto r = static_cast<std::size_t>(std::max(den.degree(), 0));
  const std::size_t fitted = std::max(last_change + 1, static_cast<std::size_t>(order) + r);
  if (len < fitted + 2 * r + 5) return std::nullopt;

  std::vector<Rational> head(s.begin(), s.begin() + order);
  Polynomial num = Polynomial(head) * den;
  std::vector<Rational> truncated;
  for (int i = 0; i < order; ++i) truncated.push_back(num.coeff(i));
  return RationalSeries(Polynomial(truncated), den);
}

}  // namespace colorlie
