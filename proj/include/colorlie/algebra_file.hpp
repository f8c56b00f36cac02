#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "colorlie/color.hpp"
#include "colorlie/rational_function.hpp"

namespace colorlie {

/// Malformed algebra file; the message names the offending line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text description of a color Lie algebra over Q(t):
///
///     # comment
///     name = case-1
///     dimension = 3
///     signs = [[1, 1, 1], [1, 1, -1], [1, -1, 1]]
///     bracket 1 2 = [0, t, 0]
///     bracket 1 3 = [0, 0, 1]
///     parameter = -1
///     grading = [[0, 1], [1, 0], [1, 1]]
///
/// Indices are 1-based, `bracket i j` needs i <= j, coefficients use the
/// scalar grammar. `parameter` assigns t; `grading` lists Z_2 bit vectors.
struct AlgebraFile {
  std::string name;
  CommutationMatrix signs;
  ColorLieAlgebra<RationalFunction>::BracketTable brackets;
  std::optional<Rational> parameter;
  std::optional<GradingAssignment> grading;

  int dimension() const { return signs.size(); }
  /// Whether some coefficient depends on t.
  bool parametric() const;
  /// Throws std::invalid_argument on out-of-range structure data.
  ColorLieAlgebra<RationalFunction> algebra() const;
};

AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile read_algebra_file(const std::string& path);
std::string write_algebra_file(const AlgebraFile& file);

/// A catalog entry as a file; the parameter of entries 1, 6, 10 is left as t.
AlgebraFile export_catalog_entry(int id);

}  // namespace colorlie
