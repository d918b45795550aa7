#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "superdim/polytools.hpp"
#include "superdim/typicality.hpp"

using namespace superdim;

namespace {

SampledPolynomial sample(const std::vector<Rational>& a, const Integer& base, const Integer& at) {
  SampledPolynomial p{at, {}};
  for (std::size_t k = 0; k < a.size(); ++k) p.values.push_back(oracle::binomial_sum(a, base, at + static_cast<long>(k)));
  return p;
}

}  // namespace

TEST(Polytools, Examples) {
  EXPECT_EQ(binomial_coefficients({0, {0, 0, 1}}), (std::vector<Rational>{0, 0, 1}));
  EXPECT_EQ(binomial_coefficients({0, {0, 1}}), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(binomial_coefficients({0, {0, 1, 4}}), (std::vector<Rational>{0, 1, 2}));
  EXPECT_TRUE(is_integer_valued({0, {0, 0, 1}}));
  EXPECT_FALSE(is_integer_valued({0, {0, Rational(1, 2)}}));
  EXPECT_THROW(binomial_coefficients({0, {}}), ValidationError);
}

// Random integer combinations of binomials: the coefficients come back exactly
// by both routes, evaluation reproduces the polynomial, and sampling on any
// other ray gives integer coefficients again.
TEST(Polytools, RoundTripAndRayEquivalence) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> deg(0, 8), coef(-50, 50), base(-20, 20);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rational> a(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& c : a) c = coef(rng);
    const Integer b0 = base(rng);
    const SampledPolynomial p = sample(a, b0, b0);
    EXPECT_EQ(binomial_coefficients(p), a);
    EXPECT_EQ(binomial_coefficients_alternating(p), a);
    EXPECT_TRUE(is_integer_valued(p));
    for (int x = -30; x <= 30; x += 7) EXPECT_EQ(evaluate_binomial(a, b0, x), oracle::binomial_sum(a, b0, x));
    const Integer other = base(rng) * 3;
    const SampledPolynomial q = sample(a, b0, other);
    EXPECT_TRUE(is_integer_valued(q));
    const auto aq = binomial_coefficients(q);
    for (int x = -30; x <= 30; x += 5) EXPECT_EQ(evaluate_binomial(aq, other, x), oracle::binomial_sum(a, b0, x));
  }
}

TEST(Polytools, NonIntegerValuedRejectedOnEveryRay) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-9, 9), denom(2, 7), start(-15, 15);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> a{coef(rng), coef(rng), coef(rng), coef(rng)};
    a[static_cast<std::size_t>(trial % 4)] += Rational(1, denom(rng));
    for (int k = 0; k < 3; ++k) EXPECT_FALSE(is_integer_valued(sample(a, 0, start(rng))));
  }
  // x/2 and x(x-1)/2, sampled from a negative start.
  EXPECT_FALSE(is_integer_valued({-3, {Rational(-3, 2), -1, Rational(-1, 2)}}));
  EXPECT_TRUE(is_integer_valued({-3, {6, 3, 1}}));
}

// The g_0 dimension of osp(4|4) along the hidden label (other labels 0) is an
// integer-valued polynomial; of osp(3|2) it is not.
TEST(Polytools, HiddenLabelSlices) {
  auto slice = [](const AlgebraId& id) {
    const RootSystem rs = build(id);
    SampledPolynomial p{0, {}};
    for (long x = 0; x < 12; ++x) {
      std::vector<LabelVector> even;
      for (const auto& f : rs.even_factors) {
        LabelVector v(f.slots.size(), Rational(0));
        for (std::size_t k = 0; k < f.slots.size(); ++k)
          if (f.slots[k] == kHiddenSlot) v[k] = x;
        even.push_back(v);
      }
      p.values.push_back(typical_dim_even(rs, even) / Rational(pow2(static_cast<unsigned>(rs.N1))));
    }
    return p;
  };
  EXPECT_TRUE(is_integer_valued(slice(AlgebraId::osp(4, 2))));
  EXPECT_FALSE(is_integer_valued(slice(AlgebraId::osp(3, 1))));
  EXPECT_FALSE(is_integer_valued(slice(AlgebraId::g3())));
}
