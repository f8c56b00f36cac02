#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colorlie/dga.hpp"

namespace colorlie {

struct BettiTable {
  std::string algebra;
  /// A scalar in the scalar grammar, or "generic".
  std::string parameter;
  std::vector<std::int64_t> h;

  int max_degree() const { return static_cast<int>(h.size()) - 1; }
};

template <ExactScalar S>
BettiTable betti(const Differential<S>& d, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  BettiTable t;
  Index previous_rank = 0;
  for (int n = 0; n <= max_degree; ++n) {
    const DifferentialMatrix<S> dm = differential_matrix(d, n);
    const Index r = rank<S>(dm.matrix);
    t.h.push_back(static_cast<std::int64_t>(dm.matrix.cols() - r - previous_rank));
    previous_rank = r;
  }
  return t;
}

template <ExactScalar S>
BettiTable betti(const ColorLieAlgebra<S>& g, int max_degree) {
  return betti(differential_from_brackets(g), max_degree);
}

/// h_1 = n - dim [g,g].
template <ExactScalar S>
bool h1_dimension_check(const ColorLieAlgebra<S>& g) {
  return betti(g, 1).h[1] == g.dimension() - static_cast<std::int64_t>(derived_algebra(g).dimension);
}

template <ExactScalar S>
struct CohomologyClass {
  int degree = 0;
  DgaElement<S> representative;
};

/// Cocycles Z^n and coboundaries B^n as coordinate subspaces of A^!_n.
template <ExactScalar S>
struct CocycleData {
  std::vector<ExactVector<S>> cocycles;
  std::vector<ExactVector<S>> coboundaries;
  Index ambient = 0;
};

template <ExactScalar S>
CocycleData<S> cocycle_data(const Differential<S>& d, int n) {
  CocycleData<S> out;
  const DifferentialMatrix<S> dn = differential_matrix(d, n);
  out.ambient = dn.matrix.cols();
  out.cocycles = rank_kernel<S>(dn.matrix).kernel_basis;
  if (n > 0) out.coboundaries = image_basis<S>(differential_matrix(d, n - 1).matrix);
  return out;
}

/// Canonical complement of B^n in Z^n: the reduced echelon basis of the
/// cocycles' normal forms modulo B^n.
template <ExactScalar S>
std::vector<CohomologyClass<S>> representatives(const Differential<S>& d, int n) {
  const CocycleData<S> data = cocycle_data(d, n);
  const Subspace<S> b(data.coboundaries, data.ambient);
  std::vector<ExactVector<S>> reduced;
  reduced.reserve(data.cocycles.size());
  for (const auto& z : data.cocycles) reduced.push_back(b.normal_form(z));
  const Subspace<S> complement(reduced, data.ambient);

  std::vector<CohomologyClass<S>> out;
  for (const auto& v : complement.basis()) out.push_back({n, from_coordinates<S>(d.ambient, v, n)});
  return out;
}

/// Reduces a cocycle modulo B^n; a zero representative means the zero class.
template <ExactScalar S>
CohomologyClass<S> reduce_class(const Differential<S>& d, const DgaElement<S>& cocycle, int n) {
  if (cocycle.is_zero()) return {n, {}};
  const CocycleData<S> data = cocycle_data(d, n);
  const Subspace<S> b(data.coboundaries, data.ambient);
  return {n, from_coordinates<S>(d.ambient, b.normal_form(coordinates<S>(d.ambient, cocycle, n)), n)};
}

template <ExactScalar S>
CohomologyClass<S> cup_product(const Differential<S>& d, const CohomologyClass<S>& a, const CohomologyClass<S>& b) {
  const int n = a.degree + b.degree;
  return reduce_class(d, multiply(d.ambient, a.representative, b.representative), n);
}

}  // namespace colorlie
