#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/color.hpp"
#include "colorlie/rational_function.hpp"
#include "colorlie/series.hpp"

namespace colorlie::catalog {

/// One structure constant c_{ij}^k (0-based, i <= j); either 1 or the parameter mu.
struct BracketTerm {
  int i, j, k;
  bool parametric = false;
};

struct CatalogEntry {
  int id;
  /// Bracketed number of the entry in the classification table.
  int classification_id;
  CommutationMatrix signs;
  std::vector<BracketTerm> brackets;
  /// Relations as printed, one per line.
  std::string relations;
  /// Poincare series as printed, including parameter case splits.
  std::string printed_series;

  bool parameterized() const;
};

/// Anticommuting pairs and square-zero generators, 0-based.
struct Graph {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> loops;
};

constexpr int entry_count = 15;

const std::vector<CatalogEntry>& entries();
/// Throws std::out_of_range unless 1 <= id <= 15.
const CatalogEntry& entry(int id);

Graph graph(const CommutationMatrix& cm);

template <ExactScalar S>
ColorLieAlgebra<S> build(const CatalogEntry& e, const S& mu) {
  typename ColorLieAlgebra<S>::BracketTable table;
  for (const BracketTerm& b : e.brackets) {
    auto [it, inserted] = table.try_emplace({b.i, b.j}, zero_vector<S>(3));
    it->second(b.k) = it->second(b.k) + (b.parametric ? mu : S(1));
  }
  return ColorLieAlgebra<S>(e.signs, std::move(table));
}

/// The algebra with the printed relations and parameter mu. mu must be
/// given exactly for the parameterized entries (1, 6, 10) and be nonzero.
/// Throws std::invalid_argument otherwise.
ColorLieAlgebra<Rational> load(int id, std::optional<Rational> mu = std::nullopt);

/// Parameterized entries get mu = t; the others are promoted to Q(t).
ColorLieAlgebra<RationalFunction> load_generic(int id);

/// Single reconciliation direction between the printed parameter and the
/// bracket parameter that reproduces the printed cohomology: mu -> 1/mu.
Rational reconcile(const Rational& printed_mu);
extern const char* const reconciliation_note;

/// The printed series for parameter value printed_mu; nullopt selects the
/// generic (irrational) row of a parameterized entry.
RationalSeries expected_series(int id, std::optional<Rational> printed_mu = std::nullopt);
std::vector<std::int64_t> expected_betti(int id, std::optional<Rational> printed_mu, int max_degree);

struct AbelianEntry {
  CommutationMatrix signs;
  int q;
  std::string label;
};

/// The 8 diagonal patterns for n = 3. Off-diagonal s_ij = -1 when both
/// generators are even, +1 otherwise.
std::vector<AbelianEntry> abelian_family();

/// The three-dimensional color Heisenberg algebra: all pairs anticommute and
/// e1 e2 + e2 e1 = e3. Identical to entry 5.
ColorLieAlgebra<Rational> heisenberg();

}  // namespace colorlie::catalog
