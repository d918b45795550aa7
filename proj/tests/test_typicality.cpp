#include <gtest/gtest.h>

#include "superdim/enumerate.hpp"
#include "superdim/format.hpp"

using namespace superdim;

namespace {

std::shared_ptr<const RootSystem> sys(const AlgebraId& id) { return std::make_shared<const RootSystem>(build(id)); }

HighestWeight weight(const std::string& algebra, const std::string& labels) {
  return from_g_labels(sys(parse_algebra(algebra)), parse_labels(labels));
}

std::vector<Rational> set(std::initializer_list<Rational> v) {
  std::vector<Rational> out(v);
  std::sort(out.begin(), out.end());
  return out;
}

// Same labels with the free parameter replaced by a value.
std::vector<AffineScalar> substitute(const std::vector<AffineScalar>& labels, const Rational& v) {
  std::vector<AffineScalar> out;
  for (const auto& l : labels) out.emplace_back(eval(l, v));
  return out;
}

}  // namespace

TEST(HighestWeight, FromGLabels) {
  const HighestWeight b = weight("osp(3|2)", "17/2,15");
  ASSERT_TRUE(b.ls0);
  EXPECT_EQ(*b.ls0, AffineScalar(1));
  EXPECT_EQ(*weight("F(4)", "6,0,0,0").ls0, AffineScalar(4));
  const HighestWeight s = weight("sl(3|1)", "1,1,t");
  EXPECT_FALSE(s.ls0);
  EXPECT_FALSE(s.coords.back().is_constant() && s.coords[0].is_constant() && s.coords[1].is_constant() && s.coords[2].is_constant());
}

TEST(HighestWeight, FromEvenLabels) {
  const auto d = sys(AlgebraId::d21a(std::nullopt));
  const HighestWeight w = from_even_labels(d, {{5}, {0}, {0}});
  EXPECT_EQ(w.g_labels[0], AffineScalar(Rational(5, 2), Rational(5, 2), Param::Alpha));
  EXPECT_EQ(from_even_labels(sys(AlgebraId::osp(5, 1)), {{2}, {0, 1}}).g_labels,
            (std::vector<AffineScalar>{Rational(5, 2), 0, 1}));
  EXPECT_EQ(from_even_labels(sys(AlgebraId::sl(2, 1)), {{15}}).g_labels,
            (std::vector<AffineScalar>{15, AffineScalar::parameter(Param::OddLabel)}));
}

TEST(HighestWeight, Validation) {
  EXPECT_THROW(weight("sl(3|1)", "1,-1,t"), NonDominant);
  EXPECT_THROW(weight("sl(3|1)", "1/2,1,t"), NonDominant);
  EXPECT_THROW(weight("sl(3|1)", "t,1,0"), ParamMisuse);
  EXPECT_THROW(weight("osp(3|2)", "1,15"), NonIntegralHidden);
  EXPECT_THROW(weight("osp(3|2)", "t,15"), ParamMisuse);
  EXPECT_THROW(weight("osp(3|2)", "1,2,3"), ValidationError);
  EXPECT_THROW(parse_labels("t,t"), MultipleParams);
  EXPECT_EQ(parse_labels("1,1,t").size(), 3u);
  EXPECT_EQ(parse_labels("17/2,15"), (std::vector<AffineScalar>{Rational(17, 2), 15}));
}

TEST(Shifted, HiddenLabelMinusShift) {
  EXPECT_EQ(shifted(weight("osp(3|2)", "17/2,15")).even_labels, (std::vector<LabelVector>{{Rational(-1, 2)}, {15}}));
  const auto d = sys(AlgebraId::d21a(std::nullopt));
  EXPECT_EQ(shifted(from_even_labels(d, {{5}, {0}, {0}})).even_labels[0], (LabelVector{3}));
  const auto g = sys(AlgebraId::g3());
  EXPECT_EQ(shifted(from_even_labels(g, {{3}, {0, 0}})).even_labels[0], (LabelVector{Rational(-1, 2)}));
}

TEST(TypicalDim, TableValues) {
  for (const auto& [alg, labels] : std::vector<std::pair<std::string, std::string>>{{"osp(3|2)", "17/2,15"},
                                                                                     {"osp(3|4)", "0,5/2,3"},
                                                                                     {"osp(5|2)", "5/2,0,1"},
                                                                                     {"sl(6|1)", "0,0,0,0,0,t"},
                                                                                     {"sl(2|1)", "15,t"},
                                                                                     {"osp(2|6)", "t,0,0,0"}}) {
    const HighestWeight hw = weight(alg, labels);
    EXPECT_EQ(typical_dim(hw), 64) << alg;
    EXPECT_EQ(typical_dim_direct(hw), 64) << alg;
  }
  EXPECT_EQ(typical_dim(weight("F(4)", "6,0,0,0")), 256);
}

TEST(IsTypical, TypeOneExclusions) {
  const TypicalityReport r = is_typical(weight("sl(3|1)", "1,1,t"));
  EXPECT_EQ(r.verdict, Verdict::Conditional);
  EXPECT_EQ(r.tag, Param::OddLabel);
  EXPECT_EQ(r.excluded_values, set({-4, -2, 0}));
  EXPECT_EQ(is_typical(weight("osp(2|4)", "t,1,0")).excluded_values, set({0, 2, 4, 6}));
  EXPECT_EQ(is_typical(weight("sl(2|1)", "15,t")).excluded_values, set({-16, 0}));
}

TEST(IsTypical, TypeTwo) {
  EXPECT_EQ(is_typical(weight("G(3)", "6,0,0")).verdict, Verdict::Atypical);
  EXPECT_EQ(is_typical(weight("osp(5|2)", "5/2,0,1")).verdict, Verdict::Typical);
  const auto d = sys(AlgebraId::d21a(std::nullopt));
  const TypicalityReport r = is_typical(from_even_labels(d, {{5}, {0}, {0}}));
  EXPECT_EQ(r.verdict, Verdict::Conditional);
  EXPECT_EQ(r.excluded_values, set({Rational(-5, 3), Rational(-3, 5)}));
  EXPECT_EQ(r.domain_exclusions, set({-1, 0}));
}

// Row (2)-(1)-(1) of osp(4|2;a): (L+rho, e1+e2-e3) vanishes at a = 1/3, and the
// exclusion set is closed under a -> 1/a.
TEST(IsTypical, D21aRowClosedUnderInversion) {
  const auto d = sys(AlgebraId::d21a(std::nullopt));
  const TypicalityReport r = is_typical(from_even_labels(d, {{2}, {1}, {1}}));
  EXPECT_EQ(r.excluded_values, set({Rational(1, 3), 3}));
  EXPECT_EQ(is_typical(weight("osp(4|2;1/3)", "2,1,1")).verdict, Verdict::Atypical);
  EXPECT_EQ(is_typical(weight("osp(4|2;-1/3)", "1,1,1")).verdict, Verdict::Typical);
}

// Substituting an excluded value into a concrete algebra gives an atypical
// weight; any other admissible value gives a typical one of the same dimension.
TEST(IsTypical, ExclusionSetsAgreeWithConcreteSubstitution) {
  const SearchReport all = enumerate_all(64);
  for (const auto& rep : all.reps) {
    if (rep.tag == Param::None) continue;
    std::vector<Rational> probes = rep.excluded_values;
    for (const Rational& v : {Rational(7, 11), Rational(-13, 3), Rational(101), Rational(-5, 7)}) probes.push_back(v);
    for (const Rational& v : probes) {
      const bool excluded = std::binary_search(rep.excluded_values.begin(), rep.excluded_values.end(), v);
      if (rep.tag == Param::Alpha) {
        const auto concrete = sys(AlgebraId::d21a(v));
        const HighestWeight hw = from_g_labels(concrete, substitute(rep.g_labels, v));
        EXPECT_EQ(is_typical(hw).verdict, excluded ? Verdict::Atypical : Verdict::Typical) << to_string(rep.algebra) << " a=" << to_string(v);
        EXPECT_EQ(typical_dim_direct(hw), 64);
      } else {
        const HighestWeight fixed = from_g_labels(sys(rep.algebra), substitute(rep.g_labels, v));
        EXPECT_EQ(typical_dim_direct(fixed), 64);
        EXPECT_EQ(is_typical(fixed).verdict, excluded ? Verdict::Atypical : Verdict::Typical) << to_string(rep.algebra) << " t=" << to_string(v);
      }
    }
  }
}

// Adding a multiple of (1,..,1,-1,..,-1), which pairs to zero with every root,
// changes nothing observable.
TEST(IsTypical, RadicalInvariance) {
  for (const auto& [alg, labels] : std::vector<std::pair<std::string, std::string>>{{"sl(2|2)", "3,t,0"}, {"sl(2|2)", "1,t,1"},
                                                                                     {"sl(3|3)", "1,0,t,2,1"}, {"sl(3|3)", "0,0,t,0,0"}}) {
    const HighestWeight hw = weight(alg, labels);
    const int p = hw.rs->id.first();
    for (const Rational c : {Rational(1), Rational(-7, 2), Rational(5, 3)}) {
      Weight w = hw.coords;
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += AffineScalar(static_cast<int>(i) < p ? c : -c);
      const HighestWeight moved = formal_weight(hw.rs, w);
      EXPECT_EQ(moved.g_labels, hw.g_labels) << alg;
      EXPECT_EQ(typical_dim_direct(moved), typical_dim_direct(hw)) << alg;
      const TypicalityReport a = is_typical(hw), b = is_typical(moved);
      EXPECT_EQ(a.verdict, b.verdict);
      EXPECT_EQ(a.excluded_values, b.excluded_values) << alg;
    }
  }
}

// Rescaling the invariant form leaves dimensions and exclusion sets unchanged.
TEST(IsTypical, RescaledFormInvariance) {
  const SearchReport all = enumerate_all(64);
  for (const auto& rep : all.reps) {
    const auto rs = sys(rep.algebra);
    for (const Rational c : {Rational(2), Rational(-1, 3)}) {
      const auto scaled = std::make_shared<const RootSystem>(rescaled(*rs, c));
      const HighestWeight a = from_g_labels(rs, rep.g_labels), b = from_g_labels(scaled, rep.g_labels);
      EXPECT_EQ(typical_dim_direct(b), typical_dim_direct(a)) << to_string(rep.algebra);
      EXPECT_EQ(typical_dim(b), typical_dim(a));
      EXPECT_EQ(is_typical(b).excluded_values, is_typical(a).excluded_values) << to_string(rep.algebra);
    }
  }
}

TEST(TypicalDim, TwoRoutesAgree) {
  const std::vector<AlgebraId> ids{AlgebraId::osp(3, 1), AlgebraId::osp(5, 2), AlgebraId::osp(6, 1), AlgebraId::osp(1, 3),
                                   AlgebraId::d21a(Rational(1, 3)), AlgebraId::d21a(std::nullopt), AlgebraId::f4(), AlgebraId::g3(),
                                   AlgebraId::sl(3, 2), AlgebraId::osp(2, 3)};
  for (const auto& id : ids) {
    const auto rs = sys(id);
    const Integer b = rs->hidden ? shift(*rs).b : Integer(0);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<LabelVector> even;
      int k = trial;
      for (const auto& f : rs->even_factors) {
        LabelVector v;
        for (int slot : f.slots) v.emplace_back(slot == kHiddenSlot ? Rational(b) + (k++ % 3) : Rational(k++ % 4));
        even.push_back(v);
      }
      const HighestWeight hw = from_even_labels(rs, even);
      EXPECT_EQ(typical_dim(hw), typical_dim_direct(hw)) << to_string(id);
      EXPECT_EQ(typical_dim_even(*rs, even), typical_dim(hw));
    }
  }
}

// Whenever the conditions below the shift hold, the returned root is a
// positive odd root orthogonal to L + rho.
TEST(Supplementary, ReturnedRootIsOrthogonal) {
  const std::vector<AlgebraId> ids{AlgebraId::osp(3, 1), AlgebraId::osp(5, 1), AlgebraId::osp(7, 1), AlgebraId::osp(3, 2),
                                   AlgebraId::osp(6, 1), AlgebraId::osp(8, 1), AlgebraId::osp(6, 2), AlgebraId::d21a(Rational(1, 3)),
                                   AlgebraId::d21a(std::nullopt), AlgebraId::f4(), AlgebraId::g3()};
  for (const auto& id : ids) {
    const auto rs = sys(id);
    const long b = shift(*rs).b.convert_to<long>();
    std::size_t hits = 0, points = 0;
    std::size_t slots = 0;
    for (const auto& f : rs->even_factors) slots += f.slots.size();
    std::vector<long> x(slots, 0);  // g_0 labels in factor order, each in [0, 3]
    while (true) {
      std::vector<LabelVector> even;
      std::size_t k = 0;
      bool below = false;
      for (const auto& f : rs->even_factors) {
        LabelVector v;
        for (int slot : f.slots) {
          v.emplace_back(x[k++]);
          if (slot == kHiddenSlot) below = v.back() < b;
        }
        even.push_back(v);
      }
      if (below) {
        ++points;
        const HighestWeight hw = from_even_labels(rs, even);
        if (auto hit = supplementary_check(hw)) {
          ++hits;
          EXPECT_TRUE(hit->root.odd);
          const AffineScalar pr = pairing(*rs, add(hw.coords, rs->rho()), hit->root.weight);
          if (hit->alpha) EXPECT_EQ(eval(pr, *hit->alpha), 0) << to_string(id) << " " << detail::describe(*rs, even);
          else EXPECT_TRUE(pr.is_zero()) << to_string(id) << " " << detail::describe(*rs, even);
          EXPECT_TRUE(strip_admissibility(hw).admissible);
        } else {
          EXPECT_FALSE(strip_admissibility(hw).admissible);
        }
      }
      std::size_t j = 0;
      while (j < x.size() && x[j] == 3) x[j++] = 0;
      if (j == x.size()) break;
      ++x[j];
    }
    EXPECT_GT(points, 0u) << to_string(id);
    EXPECT_GT(hits, 0u) << to_string(id);
  }
}

TEST(Supplementary, Examples) {
  const auto f = sys(AlgebraId::f4());
  const auto hit = supplementary_check(from_even_labels(f, {{2}, {0, 5, 0}}));
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->root.expansion, (std::vector<long>{1, 1, 1, 0}));
  const auto d = sys(AlgebraId::d21a(std::nullopt));
  const auto dh = supplementary_check(from_even_labels(d, {{1}, {2}, {0}}));
  ASSERT_TRUE(dh);
  EXPECT_EQ(dh->root.expansion, (std::vector<long>{1, 1, 0}));
  ASSERT_TRUE(dh->alpha);
  EXPECT_EQ(*dh->alpha, 3);
  const auto b = sys(AlgebraId::osp(5, 1));
  EXPECT_TRUE(supplementary_check(from_even_labels(b, {{0}, {0, 0}})));
  EXPECT_FALSE(supplementary_check(from_even_labels(b, {{0}, {1, 0}})));
}
