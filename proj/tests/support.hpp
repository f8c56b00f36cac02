#pragma once

// Helpers shared by the homology tests and the acceptance binary.

#include <vector>

#include "colorlie/homology.hpp"

namespace support {

using colorlie::DgaElement;
using colorlie::Differential;
using colorlie::ExactVector;

/// True iff every element is a cocycle and, modulo coboundaries, the
/// elements span the same space as representatives(d, n).
template <typename S>
bool spans_cohomology(const Differential<S>& d, int n, const std::vector<DgaElement<S>>& elements) {
  const auto data = colorlie::cocycle_data(d, n);
  std::vector<ExactVector<S>> given = data.coboundaries, ours = data.coboundaries;
  for (const auto& x : elements) {
    if (!colorlie::apply_differential(d, x).is_zero()) return false;
    given.push_back(colorlie::coordinates(d.ambient, x, n));
  }
  for (const auto& c : colorlie::representatives(d, n)) ours.push_back(colorlie::coordinates(d.ambient, c.representative, n));
  return colorlie::same_span(given, ours, data.ambient);
}

}  // namespace support
