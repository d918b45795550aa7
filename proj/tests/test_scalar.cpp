#include <gtest/gtest.h>

#include "superdim/algebra.hpp"
#include "superdim/scalar.hpp"

using namespace superdim;

namespace {

const AffineScalar t = AffineScalar::parameter(Param::OddLabel);
const AffineScalar a = AffineScalar::parameter(Param::Alpha);

}  // namespace

TEST(AffineScalar, Addition) {
  EXPECT_EQ(AffineScalar(1) + AffineScalar(2), AffineScalar(3));
  EXPECT_EQ(AffineScalar(Rational(1, 2)) + a + AffineScalar(Rational(1, 2)), AffineScalar(1, 1, Param::Alpha));
  EXPECT_THROW((void)(t + a), ParamMismatch);
  EXPECT_TRUE((t - t).is_constant());
}

TEST(AffineScalar, Multiplication) {
  EXPECT_EQ(AffineScalar(2) * AffineScalar(Rational(3, 2), 1, Param::Alpha), AffineScalar(3, 2, Param::Alpha));
  EXPECT_TRUE((AffineScalar(0) * AffineScalar(5, 7, Param::OddLabel)).is_zero());
  const AffineScalar x(1, 1, Param::Alpha);
  EXPECT_THROW((void)(x * x), QuadraticOverflow);
}

TEST(AffineScalar, SolveZero) {
  const ZeroSolution z = solve_zero(AffineScalar(16, 1, Param::OddLabel));
  EXPECT_EQ(z.kind, ZeroSolution::Kind::Unique);
  EXPECT_EQ(z.value, -16);
  EXPECT_EQ(solve_zero(AffineScalar(3)).kind, ZeroSolution::Kind::None);
  EXPECT_EQ(solve_zero(AffineScalar(0)).kind, ZeroSolution::Kind::Identically);
}

TEST(AffineScalar, Eval) {
  EXPECT_EQ(eval(AffineScalar(Rational(5, 2), Rational(5, 2), Param::Alpha), 1), 5);
  EXPECT_EQ(eval(AffineScalar(7), Rational(123, 7)), 7);
  EXPECT_EQ(eval(t, Rational(1, 3)), Rational(1, 3));
}

TEST(AffineScalar, ExactRatio) {
  EXPECT_EQ(exact_ratio(AffineScalar(3, 3, Param::Alpha), AffineScalar(1, 1, Param::Alpha)), 3);
  EXPECT_EQ(exact_ratio(AffineScalar(6), AffineScalar(4)), Rational(3, 2));
  EXPECT_THROW(exact_ratio(AffineScalar(1, 2, Param::Alpha), AffineScalar(1, 1, Param::Alpha)), NonProportional);
  EXPECT_THROW(exact_ratio(a, AffineScalar(2)), NonProportional);
  EXPECT_THROW(exact_ratio(AffineScalar(1), AffineScalar(0)), NonProportional);
}

TEST(AffineScalar, TextRoundTrip) {
  for (const char* s : {"5/2*a+5/2", "a+5/2", "-a", "3/2*a-1", "7", "-4/3"}) {
    const AffineScalar x = parse_affine(s, Param::Alpha);
    EXPECT_EQ(to_string(x), s);
    EXPECT_EQ(parse_affine(to_string(x), Param::Alpha), x);
  }
  EXPECT_EQ(to_string(t), "t");
  EXPECT_THROW(parse_affine("2*b", Param::Alpha), SyntaxError);
  EXPECT_THROW(parse_rational("1/0"), SyntaxError);
  EXPECT_THROW(parse_rational(""), SyntaxError);
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
}

TEST(AffineScalar, CanonicalOrder) {
  EXPECT_EQ(order(AffineScalar(1), AffineScalar(2)), std::strong_ordering::less);
  EXPECT_EQ(order(AffineScalar(1, 1, Param::Alpha), AffineScalar(1, 2, Param::Alpha)), std::strong_ordering::less);
  EXPECT_EQ(order(a, a), std::strong_ordering::equal);
}

TEST(Integers, PowersAndBinomials) {
  EXPECT_EQ(pow2(10), 1024);
  EXPECT_EQ(binomial(7, 3), 35);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
}

TEST(AlgebraId, Parsing) {
  EXPECT_EQ(parse_algebra("sl(3|1)"), AlgebraId::sl(3, 1));
  EXPECT_EQ(parse_algebra("SL(3|1)"), AlgebraId::sl(3, 1));
  EXPECT_EQ(parse_algebra("osp(4|2;1/3)"), AlgebraId::d21a(Rational(1, 3)));
  EXPECT_EQ(parse_algebra("osp(4|2;a)"), AlgebraId::d21a(std::nullopt));
  EXPECT_EQ(parse_algebra("osp(4|2)"), AlgebraId::d21a(Rational(1)));
  EXPECT_EQ(parse_algebra("F(4)"), AlgebraId::f4());
  EXPECT_EQ(parse_algebra("G(3)"), AlgebraId::g3());
  EXPECT_THROW(parse_algebra("sl(1|1)"), ValidationError);
  EXPECT_THROW(parse_algebra("osp(3|3)"), ValidationError);
  EXPECT_THROW(parse_algebra("osp(4|2;-1)"), ValidationError);
  EXPECT_THROW(parse_algebra("su(2)"), SyntaxError);
  EXPECT_THROW(parse_algebra("sl(3|"), SyntaxError);
}

TEST(AlgebraId, NamesRoundTrip) {
  for (const auto& id : {AlgebraId::sl(2, 1), AlgebraId::sl(3, 3), AlgebraId::osp(2, 3), AlgebraId::osp(5, 2), AlgebraId::osp(1, 4),
                         AlgebraId::osp(8, 2), AlgebraId::d21a(Rational(-2, 5)), AlgebraId::d21a(std::nullopt), AlgebraId::f4(), AlgebraId::g3()})
    EXPECT_EQ(parse_algebra(to_string(id)), id) << to_string(id);
}

TEST(AlgebraId, Classification) {
  EXPECT_EQ(classify(AlgebraId::sl(2, 2)), AlgebraType::TypeI0);
  EXPECT_EQ(classify(AlgebraId::sl(3, 1)), AlgebraType::TypeI1);
  EXPECT_EQ(classify(AlgebraId::osp(2, 3)), AlgebraType::TypeI1);
  EXPECT_EQ(classify(AlgebraId::g3()), AlgebraType::TypeII);
  EXPECT_EQ(classify(AlgebraId::osp(1, 2)), AlgebraType::TypeII);
  EXPECT_EQ(kac_name(AlgebraId::osp(5, 1)), "B(2|1)");
  EXPECT_EQ(kac_name(AlgebraId::osp(5, 2)), "B(2|2)");
}
