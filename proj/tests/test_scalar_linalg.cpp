#include <random>

#include <gtest/gtest.h>

#include "colorlie/catalog.hpp"
#include "colorlie/dga.hpp"
#include "colorlie/exact_linalg.hpp"
#include "colorlie/scalar.hpp"
#include "oracles.hpp"

using namespace colorlie;

namespace {

ExactMatrix<Rational> from_rows(const std::vector<std::vector<int>>& rows) {
  ExactMatrix<Rational> m = zero_matrix<Rational>(static_cast<Index>(rows.size()),
                                                  rows.empty() ? 0 : static_cast<Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return m;
}

std::vector<std::vector<Rational>> to_nested(const ExactMatrix<Rational>& m) {
  std::vector<std::vector<Rational>> out(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(m(i, j));
  return out;
}

ExactMatrix<Rational> random_matrix(std::mt19937& rng, int max_dim) {
  std::uniform_int_distribution<int> dim(1, max_dim), entry(-3, 3);
  const int r = dim(rng), c = dim(rng);
  ExactMatrix<Rational> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = entry(rng);
  return m;
}

}  // namespace

TEST(Rational, LowestTermsAndSign) {
  EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
  EXPECT_EQ(Rational(-3, -6), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
  EXPECT_GT(Rational(1, 2).denominator(), 0);
}

TEST(Rational, ZeroDenominatorThrows) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-1/3"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
}

TEST(Polynomial, DivisionAndGcd) {
  const Polynomial t = Polynomial::variable();
  const Polynomial a = t * t - Polynomial(1);
  const auto [q, r] = divmod(a, t - Polynomial(1));
  EXPECT_EQ(q, t + Polynomial(1));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(a, t * t + Polynomial(2) * t + Polynomial(1)), t + Polynomial(1));
  EXPECT_THROW(divmod(a, Polynomial()), std::domain_error);
}

TEST(RationalFunction, Simplifies) {
  const RationalFunction f = parse_scalar("(t^2-1)/(t-1)");
  EXPECT_EQ(f, parse_scalar("t+1"));
  EXPECT_EQ(f.to_string(), "t+1");
  EXPECT_EQ(parse_scalar("2/4"), RationalFunction(Rational(1, 2)));
  EXPECT_EQ(parse_scalar("(-3)/(-6)"), RationalFunction(Rational(1, 2)));
}

TEST(RationalFunction, DenominatorIsMonic) {
  const RationalFunction f = parse_scalar("1/(2t+4)");
  EXPECT_EQ(f.denominator().leading(), Rational(1));
  EXPECT_EQ(f.evaluate(Rational(0)), Rational(1, 4));
}

TEST(RationalFunction, ZeroDenominator) {
  EXPECT_THROW(parse_scalar("1/(t-t)"), std::domain_error);
  try {
    parse_scalar("1/0");
    FAIL();
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("division by zero"), std::string::npos);
  }
  EXPECT_THROW(parse_scalar("1/(t+1)").evaluate(Rational(-1)), std::domain_error);
}

TEST(ScalarGrammar, AcceptsDocumentedForms) {
  EXPECT_EQ(parse_scalar("-1/3"), RationalFunction(Rational(-1, 3)));
  EXPECT_EQ(parse_scalar("2*t"), parse_scalar("2t"));
  EXPECT_EQ(parse_scalar("t^2-1").evaluate(Rational(3)), Rational(8));
  EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
}

TEST(ScalarGrammar, RejectsSecondParameter) {
  EXPECT_THROW(parse_scalar("s+1"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("t*u"), std::invalid_argument);
  EXPECT_THROW(parse_rational("t"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1+"), std::invalid_argument);
}

TEST(RankKernel, ZeroMatrix) {
  const RankKernel<Rational> rk = rank_kernel<Rational>(zero_matrix<Rational>(3, 3));
  EXPECT_EQ(rk.rank, 0);
  ASSERT_EQ(rk.kernel_basis.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(rk.kernel_basis[static_cast<std::size_t>(i)], unit_vector<Rational>(3, i));
}

TEST(RankKernel, ProportionalRows) {
  const ExactMatrix<Rational> m = from_rows({{1, 2}, {2, 4}});
  const RankKernel<Rational> rk = rank_kernel(m);
  EXPECT_EQ(rk.rank, 1);
  ASSERT_EQ(rk.kernel_basis.size(), 1u);
  EXPECT_EQ(rk.kernel_basis[0](0), Rational(-2));
  EXPECT_EQ(rk.kernel_basis[0](1), Rational(1));
}

TEST(RankKernel, CaseThreeFirstDifferential) {
  const auto d = differential_from_brackets(catalog::load(3));
  const RankKernel<Rational> rk = rank_kernel(differential_matrix(d, 1).matrix);
  EXPECT_EQ(rk.rank, 3);
  EXPECT_TRUE(rk.kernel_basis.empty());
}

TEST(ImageBasis, Trivial) {
  ExactMatrix<Rational> id = zero_matrix<Rational>(2, 2);
  id(0, 0) = 1;
  id(1, 1) = 1;
  const auto basis = image_basis(id);
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(basis[0], unit_vector<Rational>(2, 0));
  EXPECT_EQ(basis[1], unit_vector<Rational>(2, 1));
  EXPECT_TRUE(image_basis<Rational>(zero_matrix<Rational>(3, 2)).empty());
}

TEST(ImageBasis, CaseFiveFirstDifferential) {
  const auto d = differential_from_brackets(catalog::load(5));
  const auto basis = image_basis(differential_matrix(d, 1).matrix);
  ASSERT_EQ(basis.size(), 1u);
  // Degree-2 monomials in MonomialOrder: f1f2, f1f3, f2f3.
  EXPECT_EQ(basis[0], unit_vector<Rational>(3, 0));
}

TEST(RankProperty, KernelVectorsAnnihilateAndDimensionsAdd) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const ExactMatrix<Rational> m = random_matrix(rng, 5);
    const RankKernel<Rational> rk = rank_kernel(m);
    EXPECT_EQ(rk.rank + static_cast<Index>(rk.kernel_basis.size()), m.cols());
    for (const auto& v : rk.kernel_basis) EXPECT_TRUE(is_zero(ExactVector<Rational>(m * v)));
    EXPECT_EQ(static_cast<Index>(image_basis(m).size()), rk.rank);
  }
}

TEST(RankProperty, EliminationsAgreeWithMinors) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const ExactMatrix<Rational> m = random_matrix(rng, 4);
    const Index r = fraction_free_rank<Rational>(m);
    EXPECT_EQ(r, reduced_echelon<Rational>(m).rank());
    EXPECT_EQ(r, rank<Rational>(m));
    EXPECT_EQ(r, rank<Rational>(m.transpose()));
    EXPECT_EQ(r, oracle::minor_rank(to_nested(m)));
  }
}

TEST(RankProperty, SpecializationAgreesOffExceptionalSet) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-3, 3), num(-50, 50), den(1, 20);
  const RationalFunction t = RationalFunction::parameter();
  for (int trial = 0; trial < 10; ++trial) {
    ExactMatrix<RationalFunction> m(4, 5);
    for (Index i = 0; i < 4; ++i)
      for (Index j = 0; j < 5; ++j) m(i, j) = RationalFunction(entry(rng)) + RationalFunction(entry(rng)) * t;
    const Index generic = rank<RationalFunction>(m);
    EXPECT_EQ(generic, fraction_free_rank<RationalFunction>(m));
    int agree = 0;
    for (int k = 0; k < 100; ++k) {
      const Rational x(num(rng), den(rng));
      agree += rank<Rational>(specialize(m, x)) == generic ? 1 : 0;
    }
    EXPECT_GE(agree, 95);
  }
}

TEST(Subspace, NormalFormAndSpan) {
  const std::vector<ExactVector<Rational>> span = {unit_vector<Rational>(3, 0) + unit_vector<Rational>(3, 1)};
  const Subspace<Rational> s(span, 3);
  EXPECT_EQ(s.dimension(), 1);
  EXPECT_TRUE(s.contains(span[0] * Rational(5)));
  EXPECT_FALSE(s.contains(unit_vector<Rational>(3, 2)));
  const ExactVector<Rational> nf = s.normal_form(unit_vector<Rational>(3, 0));
  EXPECT_EQ(nf, ExactVector<Rational>(unit_vector<Rational>(3, 0) - span[0]));
  EXPECT_TRUE(same_span<Rational>(span, {span[0] * Rational(-2)}, 3));
}
