#include <random>

#include <gtest/gtest.h>

#include "colorlie/catalog.hpp"
#include "colorlie/series.hpp"
#include "oracles.hpp"

using namespace colorlie;

namespace {

using Seq = std::vector<std::int64_t>;

Polynomial poly(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int x : coeffs) c.emplace_back(x);
  return Polynomial(std::move(c));
}

Seq padded(Seq head, std::size_t len, std::int64_t fill) {
  while (head.size() < len) head.push_back(fill);
  return head;
}

std::vector<RationalSeries> printed_series() {
  std::vector<RationalSeries> out;
  for (int id = 1; id <= catalog::entry_count; ++id) {
    if (!catalog::entry(id).parameterized()) {
      out.push_back(catalog::expected_series(id));
      continue;
    }
    out.push_back(catalog::expected_series(id, std::nullopt));
    for (const Rational mu : {Rational(-1), Rational(-1, 2), Rational(-1, 4), Rational(2), Rational(-2), Rational(3),
                              Rational(-3), Rational(4, 3)})
      out.push_back(catalog::expected_series(id, mu));
  }
  return out;
}

}  // namespace

TEST(Recognize, Examples) {
  EXPECT_EQ(recognize(padded({1}, 40, 2)), RationalSeries(one_plus_z(), one_minus_z_pow(1)));
  EXPECT_EQ(recognize(padded({1, 1}, 40, 0)), RationalSeries(one_plus_z()));
  const auto cube = recognize(padded({1, 3, 3, 1}, 40, 0));
  ASSERT_TRUE(cube);
  EXPECT_EQ(cube->to_string(), "1+3z+3z^2+z^3");
  EXPECT_TRUE(cube->is_polynomial());
}

TEST(Recognize, NeedsTwelveTerms) {
  EXPECT_THROW(recognize(Seq(11, 1)), std::invalid_argument);
  EXPECT_NO_THROW(recognize(Seq(12, 1)));
}

TEST(Recognize, Inconclusive) {
  EXPECT_FALSE(recognize(Seq{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}));
  // A late nonzero term leaves no validation window.
  EXPECT_FALSE(recognize(padded(Seq(11, 0), 12, 1)));
  // Period 8 needs more than 12 terms to confirm.
  const RationalSeries slow(one_plus_z(), one_minus_z_pow(8));
  EXPECT_FALSE(recognize(slow.expand(11)));
  EXPECT_EQ(recognize(slow.expand(40)), slow);
  // Order 13: 40 terms are not enough.
  const RationalSeries deep(one_plus_z(), one_minus_z_pow(14));
  EXPECT_FALSE(recognize(deep.expand(39)));
  EXPECT_EQ(recognize(deep.expand(60)), deep);
}

TEST(Recognize, RoundTripOnPrintedSeries) {
  for (const auto& rs : printed_series()) {
    const auto got = recognize(rs.expand(40));
    ASSERT_TRUE(got) << rs.to_string();
    EXPECT_EQ(*got, rs);
    EXPECT_EQ(got->to_string(), rs.to_string());
  }
}

TEST(Recognize, AcceptedMeansReproduced) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> small(-3, 3), len(12, 30);
  for (int trial = 0; trial < 300; ++trial) {
    Seq seq(static_cast<std::size_t>(len(rng)));
    // Mix of random recurrences and noise.
    const int a = small(rng), b = small(rng);
    seq[0] = small(rng);
    seq[1] = small(rng);
    for (std::size_t k = 2; k < seq.size(); ++k) seq[k] = a * seq[k - 1] + b * seq[k - 2] + (trial % 3 == 0 ? small(rng) : 0);
    const auto got = recognize(seq);
    if (got) EXPECT_EQ(got->expand(static_cast<int>(seq.size()) - 1), seq);
  }
}

TEST(Recognize, FiniteSupportGivesPolynomial) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> value(-5, 5), degree(0, 8);
  for (int trial = 0; trial < 100; ++trial) {
    Seq head(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& x : head) x = value(rng);
    const auto got = recognize(padded(head, 40, 0));
    ASSERT_TRUE(got);
    EXPECT_TRUE(got->is_polynomial());
    EXPECT_EQ(got->expand(39), padded(head, 40, 0));
  }
}

TEST(AbelianClosedForm, Examples) {
  EXPECT_EQ(abelian_closed_form(3, 0), RationalSeries(poly({1, 3, 3, 1})));
  EXPECT_EQ(abelian_closed_form(3, 3).expand(3), (Seq{1, 3, 6, 10}));
  EXPECT_EQ(abelian_closed_form(3, 1).to_string(), "(1+2z+z^2)/(1-z)");
  EXPECT_THROW(abelian_closed_form(3, 4), std::invalid_argument);
  EXPECT_THROW(abelian_closed_form(3, -1), std::invalid_argument);
}

TEST(Expand, Examples) {
  EXPECT_EQ(RationalSeries(one_plus_z(), one_minus_z_pow(1)).expand(4), (Seq{1, 2, 2, 2, 2}));
  EXPECT_EQ(RationalSeries(one_plus_z(), one_minus_z_pow(3)).expand(7), (Seq{1, 1, 0, 1, 1, 0, 1, 1}));
  EXPECT_EQ(RationalSeries(poly({1, 0, 0, 1})).expand(4), (Seq{1, 0, 0, 1, 0}));
}

TEST(Expand, MatchesLongDivision) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> value(-3, 3), degree(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> num(static_cast<std::size_t>(degree(rng)) + 1), den(static_cast<std::size_t>(degree(rng)) + 1);
    for (auto& x : num) x = value(rng);
    for (auto& x : den) x = value(rng);
    den[0] = 1;
    std::vector<Rational> n, d;
    for (auto x : num) n.emplace_back(static_cast<long>(x));
    for (auto x : den) d.emplace_back(static_cast<long>(x));
    EXPECT_EQ(RationalSeries(Polynomial(n), Polynomial(d)).expand(25), oracle::expand(num, den, 25));
  }
}

TEST(RationalSeries, CanonicalForm) {
  // (1+z)/(1-z^2) = 1/(1-z).
  const RationalSeries r(one_plus_z(), Polynomial({Rational(1), Rational(0), Rational(-1)}));
  EXPECT_EQ(r, RationalSeries(Polynomial(1), one_minus_z_pow(1)));
  EXPECT_EQ(r.to_string(), "1/(1-z)");
  // Denominator with negative constant term is normalized.
  const RationalSeries s(Polynomial({Rational(-1)}), Polynomial({Rational(-1), Rational(1)}));
  EXPECT_EQ(s, RationalSeries(Polynomial(1), one_minus_z_pow(1)));
  EXPECT_THROW(RationalSeries(Polynomial(1), Polynomial({Rational(0), Rational(1)})), std::domain_error);
  EXPECT_THROW(RationalSeries(Polynomial({Rational(1, 2)}), Polynomial(1)), std::invalid_argument);
}
