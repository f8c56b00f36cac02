#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/color.hpp"
#include "colorlie/series.hpp"

namespace colorlie {

/// The standard algebra A_{J,Q}: generators f_1..f_n with f_i^2 = 0 for
/// i in J, f_i f_j = f_j f_i for {i,j} in Q and f_i f_j = -f_j f_i for the
/// remaining pairs. Indices are 0-based.
class SignAlgebra {
 public:
  SignAlgebra() = default;
  /// `commuting` is read on i < j only.
  SignAlgebra(std::vector<bool> square_zero, std::vector<std::vector<bool>> commuting);

  int generators() const { return static_cast<int>(square_zero_.size()); }
  bool square_zero(int i) const { return square_zero_[static_cast<std::size_t>(i)]; }
  bool commute(int i, int j) const {
    return i < j ? commuting_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                 : commuting_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  /// Number of generators in J.
  int square_zero_count() const;

  friend bool operator==(const SignAlgebra& a, const SignAlgebra& b);

  /// e.g. "J={1,2,3} Q={(1,2),(1,3),(2,3)}" (1-based).
  std::string describe() const;

 private:
  std::vector<bool> square_zero_;
  std::vector<std::vector<bool>> commuting_;
};

/// A_{J,Q}^! = A_{[n]-J, P-Q}.
SignAlgebra quadratic_dual(const SignAlgebra& a);

/// U(g_ab) as A_{J,Q}: J = {i : s(i,i) = -1}, Q = {(i,j) : s(i,j) = +1}.
SignAlgebra abelian_enveloping(const CommutationMatrix& cm);

/// The Koszul dual A^! of U(g_ab).
inline SignAlgebra dual_of(const CommutationMatrix& cm) { return quadratic_dual(abelian_enveloping(cm)); }

template <ExactScalar S>
SignAlgebra dual_of(const ColorLieAlgebra<S>& g) {
  return dual_of(g.commutation());
}

/// Exponent vector of f_1^{a_1} ... f_n^{a_n}.
using DualMonomial = std::vector<int>;

inline int degree(const DualMonomial& m) {
  int d = 0;
  for (int a : m) d += a;
  return d;
}

/// Degree first, then reverse lexicographic on exponents, so within a
/// degree f_1-heavy monomials come first.
struct MonomialOrder {
  bool operator()(const DualMonomial& a, const DualMonomial& b) const {
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;
  }
};

/// Degree-d monomials respecting the square-zero caps, in MonomialOrder.
std::vector<DualMonomial> monomial_basis(const SignAlgebra& a, int degree);

/// Normal form of the product of two monomials: sign and exponent vector,
/// or nullopt when a capped exponent exceeds 1.
std::optional<std::pair<int, DualMonomial>> multiply_monomials(const SignAlgebra& a, const DualMonomial& x,
                                                               const DualMonomial& y);

std::string monomial_to_string(const DualMonomial& m, const std::string& letter = "f");

/// Hilbert series of A_{J,Q}: (1+z)^{|J|} / (1-z)^{n-|J|}.
RationalSeries hilbert_series(const SignAlgebra& a);

/// Exact linear combination of dual monomials; zero coefficients are never stored.
template <ExactScalar S>
class DgaElement {
 public:
  using Terms = std::map<DualMonomial, S, MonomialOrder>;

  DgaElement() = default;
  static DgaElement monomial(const DualMonomial& m, const S& c = S(1)) {
    DgaElement e;
    e.add(m, c);
    return e;
  }
  static DgaElement unit(int generators) { return monomial(DualMonomial(static_cast<std::size_t>(generators), 0)); }
  static DgaElement generator(int generators, int i) {
    DualMonomial m(static_cast<std::size_t>(generators), 0);
    m[static_cast<std::size_t>(i)] = 1;
    return monomial(m);
  }

  void add(const DualMonomial& m, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The single degree of a homogeneous element (-1 for zero or mixed).
  int homogeneous_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
      const int md = colorlie::degree(m);
      if (d >= 0 && d != md) return -1;
      d = md;
    }
    return d;
  }

  DgaElement& operator+=(const DgaElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  DgaElement& operator-=(const DgaElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  DgaElement& operator*=(const S& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v = v * c;
    return *this;
  }
  friend DgaElement operator+(DgaElement a, const DgaElement& b) { return a += b; }
  friend DgaElement operator-(DgaElement a, const DgaElement& b) { return a -= b; }
  friend bool operator==(const DgaElement& a, const DgaElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      const std::string cs = c.to_string();
      const std::string ms = monomial_to_string(m);
      std::string term;
      if (ms == "1") {
        term = cs;
      } else if (cs == "1") {
        term = ms;
      } else if (cs == "-1") {
        term = "-" + ms;
      } else {
        const bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        term = (compound ? "(" + cs + ")" : cs) + "*" + ms;
      }
      if (!out.empty() && term.front() != '-') out += "+";
      out += term;
    }
    return out;
  }

 private:
  Terms terms_;
};

/// Bilinear product in A_{J,Q}.
template <ExactScalar S>
DgaElement<S> multiply(const SignAlgebra& a, const DgaElement<S>& x, const DgaElement<S>& y) {
  DgaElement<S> out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const auto prod = multiply_monomials(a, mx, my);
      if (!prod) continue;
      S c = cx * cy;
      if (prod->first < 0) c = -c;
      out.add(prod->second, c);
    }
  }
  return out;
}

/// Coordinates of a homogeneous element in monomial_basis(a, degree).
template <ExactScalar S>
ExactVector<S> coordinates(const SignAlgebra& a, const DgaElement<S>& x, int degree) {
  const std::vector<DualMonomial> basis = monomial_basis(a, degree);
  ExactVector<S> v = zero_vector<S>(static_cast<Index>(basis.size()));
  for (const auto& [m, c] : x.terms()) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), m, MonomialOrder{});
    if (it == basis.end() || *it != m) throw std::invalid_argument("element is not in the requested degree");
    v(it - basis.begin()) = c;
  }
  return v;
}

template <ExactScalar S>
DgaElement<S> from_coordinates(const SignAlgebra& a, const ExactVector<S>& v, int degree) {
  const std::vector<DualMonomial> basis = monomial_basis(a, degree);
  DgaElement<S> x;
  for (std::size_t i = 0; i < basis.size(); ++i) x.add(basis[i], v(static_cast<Index>(i)));
  return x;
}

}  // namespace colorlie
