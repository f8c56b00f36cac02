#include "colorlie/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace colorlie {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational inv = leading().inverse();
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  Polynomial q;
  Polynomial r = a;
  const Rational lead_inv = b.leading().inverse();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const Polynomial term = Polynomial::monomial(r.leading() * lead_inv, r.degree() - b.degree());
    q += term;
    r -= term * b;
  }
  return {q, r};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial pow(const Polynomial& p, int e) {
  Polynomial r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::string Polynomial::to_string(std::string_view var, bool ascending, std::string_view times) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const int n = static_cast<int>(coeffs_.size());
  for (int step = 0; step < n; ++step) {
    const int k = ascending ? step : n - 1 - step;
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Rational mag = abs(c);
    if (c.sign() < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << times;
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace colorlie
