#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "colorlie/catalog.hpp"
#include "colorlie/color.hpp"

using namespace colorlie;

namespace {

CommutationMatrix cm(std::initializer_list<std::initializer_list<int>> rows) {
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXi m(n, n);
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int v : r) m(i, j++) = v;
    ++i;
  }
  return CommutationMatrix(m);
}

const CommutationMatrix heis = cm({{1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});

/// Cyclic Jacobi sum on all ordered triples from a full bracket table built
/// straight from the stored constants.
bool jacobi_holds(const ColorLieAlgebra<Rational>& g) {
  const int n = g.dimension();
  const auto& s = g.commutation();
  std::vector<std::vector<std::vector<Rational>>> c(
      static_cast<std::size_t>(n), std::vector<std::vector<Rational>>(static_cast<std::size_t>(n),
                                                                       std::vector<Rational>(static_cast<std::size_t>(n))));
  for (const auto& [key, v] : g.brackets())
    for (int k = 0; k < n; ++k) {
      c[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(key.second)][static_cast<std::size_t>(k)] = v(k);
      c[static_cast<std::size_t>(key.second)][static_cast<std::size_t>(key.first)][static_cast<std::size_t>(k)] =
          key.first == key.second ? v(k) : -Rational(s(key.first, key.second)) * v(k);
    }
  const auto br = [&](int a, const std::vector<Rational>& y) {
    std::vector<Rational> out(static_cast<std::size_t>(n));
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k)] +
                                           y[static_cast<std::size_t>(b)] *
                                               c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)][static_cast<std::size_t>(k)];
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d) {
        const auto t1 = br(a, c[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)]);
        const auto t2 = br(d, c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
        const auto t3 = br(b, c[static_cast<std::size_t>(d)][static_cast<std::size_t>(a)]);
        for (int k = 0; k < n; ++k) {
          const Rational sum = Rational(s(d, a)) * t1[static_cast<std::size_t>(k)] +
                               Rational(s(b, d)) * t2[static_cast<std::size_t>(k)] +
                               Rational(s(a, b)) * t3[static_cast<std::size_t>(k)];
          if (!sum.is_zero()) return false;
        }
      }
  return true;
}

ColorLieAlgebra<Rational> with_constant(const ColorLieAlgebra<Rational>& g, int i, int j, int k, const Rational& v) {
  auto table = g.brackets();
  auto [it, inserted] = table.try_emplace({i, j}, zero_vector<Rational>(g.dimension()));
  it->second(k) = v;
  return ColorLieAlgebra<Rational>(g.commutation(), table, g.grading());
}

}  // namespace

TEST(ValidateCommutation, Examples) {
  EXPECT_TRUE(validate_commutation(heis).ok());
  const ValidationReport bad = validate_commutation(cm({{1, 1}, {-1, 1}}));
  ASSERT_EQ(bad.issues.size(), 1u);
  EXPECT_NE(bad.issues[0].message.find("(1,2)"), std::string::npos);
  EXPECT_TRUE(validate_commutation(cm({{1}})).ok());
  EXPECT_FALSE(validate_commutation(cm({{2}})).ok());
}

TEST(IsInjective, Examples) {
  EXPECT_TRUE(is_injective(heis));
  EXPECT_FALSE(is_injective(cm({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})));
  EXPECT_TRUE(is_injective(cm({{1, 1}, {1, -1}})));
}

TEST(FullBracket, SkewSymmetry) {
  const auto g3 = catalog::load(3);
  // {e1,e2} = e3 with s12 = -1, so <e2,e1> = +e3.
  EXPECT_EQ(full_bracket(g3, 1, 0), unit_vector<Rational>(3, 2));
  const ColorLieAlgebra<Rational> ab(heis, {});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_TRUE(is_zero(full_bracket(ab, i, j)));
  EXPECT_EQ(full_bracket(catalog::load(7), 2, 2), unit_vector<Rational>(3, 0));
  EXPECT_THROW(full_bracket(g3, 0, 3), std::out_of_range);
}

TEST(FullBracket, SkewSymmetryOnCatalog) {
  for (int id = 1; id <= catalog::entry_count; ++id) {
    const auto g = catalog::entry(id).parameterized() ? catalog::load(id, Rational(-2)) : catalog::load(id);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        EXPECT_EQ(full_bracket(g, i, j), ExactVector<Rational>(full_bracket(g, j, i) * Rational(-g.commutation()(i, j))))
            << "entry " << id << " (" << i + 1 << "," << j + 1 << ")";
  }
}

TEST(JacobiDefect, Examples) {
  EXPECT_TRUE(jacobi_defect(catalog::load(3)).empty());
  // Every sign-compatible rescaling of case 3 is still a color Lie algebra.
  const auto rescaled = with_constant(catalog::load(3), 0, 1, 2, Rational(2));
  EXPECT_TRUE(jacobi_defect(rescaled).empty());
  EXPECT_TRUE(jacobi_holds(rescaled));
  // {e1,e2} = e1 + e3.
  const auto mutant = with_constant(catalog::load(3), 0, 1, 0, Rational(1));
  EXPECT_FALSE(jacobi_defect(mutant).empty());
  EXPECT_FALSE(jacobi_holds(mutant));
  EXPECT_TRUE(jacobi_defect(ColorLieAlgebra<Rational>(heis, {})).empty());
}

TEST(JacobiDefect, AgreesWithOrderedTripleOracle) {
  for (int id = 1; id <= catalog::entry_count; ++id) {
    const auto g = catalog::entry(id).parameterized() ? catalog::load(id, Rational(3)) : catalog::load(id);
    EXPECT_TRUE(jacobi_holds(g)) << id;
    EXPECT_TRUE(jacobi_defect(g).empty()) << id;
    for (const auto& [key, v] : g.brackets())
      for (int k = 0; k < 3; ++k) {
        if (v(k).is_zero()) continue;
        const auto m = with_constant(g, key.first, key.second, k, v(k) * Rational(2) + Rational(1));
        EXPECT_EQ(jacobi_defect(m).empty(), jacobi_holds(m)) << id;
      }
  }
}

TEST(Validate, ReportsLocatedIssues) {
  EXPECT_TRUE(validate(catalog::load(5)).ok());
  // Diagonal bracket on an even generator.
  const auto diag = with_constant(catalog::load(5), 0, 0, 2, Rational(1));
  const auto r = validate(diag);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.issues.front().kind, "diagonal");
  // c_12^1 != 0 breaks grading compatibility in the Heisenberg signs.
  const auto graded = with_constant(catalog::load(5), 0, 1, 0, Rational(1));
  bool found = false;
  for (const auto& issue : validate(graded).issues) found = found || issue.kind == "grading";
  EXPECT_TRUE(found);
  // [e1,e2] = e3, [e1,e3] = e1 in an ordinary Lie algebra.
  ColorLieAlgebra<Rational>::BracketTable t;
  t[{0, 1}] = unit_vector<Rational>(3, 2);
  t[{0, 2}] = unit_vector<Rational>(3, 0);
  const auto jac = validate(ColorLieAlgebra<Rational>(cm({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), t));
  ASSERT_FALSE(jac.ok());
  EXPECT_EQ(jac.issues.front().kind, "jacobi");
}

TEST(Validate, GradingDegreesNeedBilinearForm) {
  GradingAssignment z2{2, {{1, 0}, {0, 1}, {1, 1}}};
  EXPECT_TRUE(find_bilinear_form(z2, heis).has_value());
  const ColorLieAlgebra<Rational> ok(heis, catalog::load(5).brackets(), z2);
  EXPECT_TRUE(validate(ok).ok());
  GradingAssignment bad{1, {{0}, {0}, {0}}};
  EXPECT_FALSE(find_bilinear_form(bad, heis).has_value());
}

TEST(DerivedAlgebra, Dimensions) {
  EXPECT_EQ(derived_algebra(catalog::load(3)).dimension, 3);
  EXPECT_EQ(derived_algebra(ColorLieAlgebra<Rational>(heis, {})).dimension, 0);
  const auto d2 = derived_algebra(catalog::load(2));
  EXPECT_EQ(d2.dimension, 1);
  EXPECT_EQ(d2.basis.front(), unit_vector<Rational>(3, 1));
}

TEST(AssociatedAbelian, Examples) {
  const auto a5 = associated_abelian(catalog::load(5));
  EXPECT_TRUE(a5.is_abelian());
  EXPECT_EQ(a5.commutation(), heis);
  EXPECT_EQ(associated_abelian(a5), a5);
  EXPECT_EQ(associated_abelian(catalog::load(10, Rational(2))).commutation(),
            cm({{1, 1, 1}, {1, -1, 1}, {1, 1, -1}}));
}

TEST(AssociatedAbelian, AlwaysValid) {
  for (int id = 1; id <= catalog::entry_count; ++id) {
    const auto g = catalog::entry(id).parameterized() ? catalog::load(id, Rational(5)) : catalog::load(id);
    EXPECT_TRUE(validate(associated_abelian(g)).ok()) << id;
  }
}

TEST(TwoComponentReduction, Trichotomy) {
  // sl2-like: everything in degree 0.
  const CommutationMatrix even = cm({{1, 1}, {1, 1}});
  ColorLieAlgebra<Rational>::BracketTable lie;
  lie[{0, 1}] = unit_vector<Rational>(2, 1);
  EXPECT_EQ(two_component_reduction(ColorLieAlgebra<Rational>(even, lie, GradingAssignment{1, {{0}, {0}}})),
            ComponentClass::lie_algebra);
  // g_0 + g_1 with an odd square: a Lie superalgebra.
  const CommutationMatrix super = cm({{1, 1}, {1, -1}});
  ColorLieAlgebra<Rational>::BracketTable sq;
  sq[{1, 1}] = unit_vector<Rational>(2, 0);
  EXPECT_EQ(two_component_reduction(ColorLieAlgebra<Rational>(super, sq, GradingAssignment{1, {{0}, {1}}})),
            ComponentClass::lie_superalgebra);
  // Degrees (1,0) and (0,1), neither zero: forced abelian.
  const CommutationMatrix two = cm({{1, -1}, {-1, 1}});
  EXPECT_EQ(two_component_reduction(ColorLieAlgebra<Rational>(two, {}, GradingAssignment{2, {{1, 0}, {0, 1}}})),
            ComponentClass::abelian);
  // Heisenberg degrees: three components.
  GradingAssignment z2{2, {{1, 0}, {0, 1}, {1, 1}}};
  EXPECT_EQ(two_component_reduction(ColorLieAlgebra<Rational>(heis, catalog::load(5).brackets(), z2)),
            ComponentClass::not_applicable);
  EXPECT_THROW(two_component_reduction(catalog::load(5)), std::invalid_argument);
}

TEST(GradingViolations, InvariantUnderPermutation) {
  for (int id = 1; id <= catalog::entry_count; ++id) {
    const auto base = catalog::entry(id).parameterized() ? catalog::load(id, Rational(1)) : catalog::load(id);
    // Add a constant that may or may not respect the signs, then relabel generators.
    for (int k = 0; k < 3; ++k) {
      const auto g = with_constant(base, 0, 1, k, Rational(1));
      std::vector<int> perm = {0, 1, 2};
      do {
        Eigen::MatrixXi s(3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) s(perm[i], perm[j]) = g.commutation()(i, j);
        ColorLieAlgebra<Rational>::BracketTable t;
        for (const auto& [key, v] : g.brackets()) {
          ExactVector<Rational> w = zero_vector<Rational>(3);
          for (int m = 0; m < 3; ++m) w(perm[m]) = v(m);
          int a = perm[key.first], b = perm[key.second];
          if (a > b) {
            std::swap(a, b);
            if (a != b) w = w * Rational(-g.commutation()(key.first, key.second));
          }
          t[{a, b}] = w;
        }
        const ColorLieAlgebra<Rational> p(CommutationMatrix(s), t);
        EXPECT_EQ(grading_violations(p).empty(), grading_violations(g).empty()) << id;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(Specialize, RoundTripsThroughQt) {
  const auto g = catalog::load_generic(10);
  EXPECT_TRUE(validate(g).ok());
  EXPECT_EQ(specialize(g, Rational(-2)), catalog::load(10, Rational(-2)));
  EXPECT_EQ(specialize(promote(catalog::load(4)), Rational(0)), catalog::load(4));
}
