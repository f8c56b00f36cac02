#pragma once

#include <stdexcept>
#include <vector>

#include "colorlie/color.hpp"
#include "colorlie/exact_linalg.hpp"
#include "colorlie/koszul.hpp"

namespace colorlie {

/// How d is extended from generators to monomials.
enum class LeibnizRule {
  /// d(ab) = d(a)b + (-1)^{|a|} a d(b).
  graded,
  /// Additionally multiplies the p-th term by prod over prefix letters l of
  /// -s(l, k). Not a derivation in general; kept for comparison only.
  prefix_twisted,
};

template <ExactScalar S>
struct Differential {
  SignAlgebra ambient;
  /// on_generators[k] = d f_k, homogeneous of degree 2.
  std::vector<DgaElement<S>> on_generators;
  /// Sign rows of the source algebra, used by LeibnizRule::prefix_twisted.
  CommutationMatrix signs;
  LeibnizRule rule = LeibnizRule::graded;
};

template <ExactScalar S>
struct DifferentialMatrix {
  int degree = 0;
  /// Rows: monomial_basis(degree + 1); columns: monomial_basis(degree).
  ExactMatrix<S> matrix;
};

template <ExactScalar S>
Differential<S> differential_from_brackets(const ColorLieAlgebra<S>& g, LeibnizRule rule = LeibnizRule::graded) {
  const int n = g.dimension();
  Differential<S> d{dual_of(g), std::vector<DgaElement<S>>(static_cast<std::size_t>(n)), g.commutation(), rule};
  for (const auto& [key, coeffs] : g.brackets()) {
    const auto [i, j] = key;
    const DgaElement<S> fij =
        multiply(d.ambient, DgaElement<S>::generator(n, i), DgaElement<S>::generator(n, j));
    for (int k = 0; k < n; ++k) {
      if (coeffs(k).is_zero()) continue;
      DgaElement<S> term = fij;
      term *= coeffs(k);
      d.on_generators[static_cast<std::size_t>(k)] += term;
    }
  }
  return d;
}

/// d of a single monomial.
template <ExactScalar S>
DgaElement<S> apply_differential(const Differential<S>& d, const DualMonomial& m) {
  const int n = d.ambient.generators();
  std::vector<int> letters;
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) letters.push_back(i);

  DgaElement<S> out;
  DualMonomial prefix(static_cast<std::size_t>(n), 0);
  for (std::size_t p = 0; p < letters.size(); ++p) {
    const int k = letters[p];
    DualMonomial suffix(static_cast<std::size_t>(n), 0);
    for (std::size_t q = p + 1; q < letters.size(); ++q) ++suffix[static_cast<std::size_t>(letters[q])];

    int sign = p % 2 == 0 ? 1 : -1;
    if (d.rule == LeibnizRule::prefix_twisted)
      for (std::size_t q = 0; q < p; ++q) sign *= -d.signs(letters[q], k);

    const DgaElement<S>& dk = d.on_generators[static_cast<std::size_t>(k)];
    if (!dk.is_zero()) {
      DgaElement<S> term = multiply(d.ambient, multiply(d.ambient, DgaElement<S>::monomial(prefix), dk),
                                    DgaElement<S>::monomial(suffix));
      if (sign < 0) term *= S(-1);
      out += term;
    }
    ++prefix[static_cast<std::size_t>(k)];
  }
  return out;
}

template <ExactScalar S>
DgaElement<S> apply_differential(const Differential<S>& d, const DgaElement<S>& x) {
  if (x.homogeneous_degree() < 0 && !x.is_zero()) throw std::invalid_argument("element is not homogeneous");
  DgaElement<S> out;
  for (const auto& [m, c] : x.terms()) {
    DgaElement<S> term = apply_differential(d, m);
    term *= c;
    out += term;
  }
  return out;
}

template <ExactScalar S>
DifferentialMatrix<S> differential_matrix(const Differential<S>& d, int n) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  const std::vector<DualMonomial> src = monomial_basis(d.ambient, n);
  const std::vector<DualMonomial> dst = monomial_basis(d.ambient, n + 1);
  ExactMatrix<S> mat = zero_matrix<S>(static_cast<Index>(dst.size()), static_cast<Index>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c) {
    const DgaElement<S> image = apply_differential(d, src[c]);
    for (const auto& [m, v] : image.terms()) {
      const auto it = std::lower_bound(dst.begin(), dst.end(), m, MonomialOrder{});
      mat(it - dst.begin(), static_cast<Index>(c)) = v;
    }
  }
  return {n, std::move(mat)};
}

/// True iff d_{n+1} d_n = 0 for every n <= max_degree.
template <ExactScalar S>
bool check_d_squared(const Differential<S>& d, int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("max degree must be at least 2");
  DifferentialMatrix<S> lower = differential_matrix(d, 0);
  for (int n = 0; n <= max_degree; ++n) {
    DifferentialMatrix<S> upper = differential_matrix(d, n + 1);
    if (lower.matrix.cols() > 0 && upper.matrix.rows() > 0) {
      const ExactMatrix<S> prod = upper.matrix * lower.matrix;
      if (!is_zero(prod)) return false;
    }
    lower = std::move(upper);
  }
  return true;
}

}  // namespace colorlie
