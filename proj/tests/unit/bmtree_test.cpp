#include <gtest/gtest.h>

#include <random>

#include "locscale/errors.hpp"
#include "locscale/sylow.hpp"
#include "locscale/verify.hpp"

using namespace locscale;

namespace {

Permutation P(const char* text, std::size_t k) { return Permutation::parse(text, k); }

PermGroup c3_on_5() { return PermGroup(5, {P("(1 2 3)", 5)}); }

AxisData axis(const PermGroup& f, const char* text) { return AxisData::parse(text, f); }

std::vector<PermGroup> random_pool(std::size_t k) {
  return {PermGroup::symmetric(k), PermGroup::alternating(k), PermGroup::cyclic(k), PermGroup::dihedral(k),
          sylow_of_symmetric(k, 2), sylow_of_symmetric(k, 3), PermGroup::trivial(k)};
}

}  // namespace

TEST(AxisData, ParseAndRender) {
  const auto s4 = PermGroup::symmetric(4);
  const auto a = axis(s4, "twist=id; word=1,2");
  EXPECT_TRUE(a.twist.is_identity());
  EXPECT_EQ(a.word, (std::vector<Point>{1, 2}));
  EXPECT_EQ(a.to_string(), "twist=id; word=1,2");
  const auto b = axis(s4, "twist=(1 2 3); word=1,4,2");
  EXPECT_EQ(b.to_string(), "twist=(1 2 3); word=1,4,2");
  EXPECT_EQ(axis(s4, "word=3,1").to_string(), "twist=id; word=3,1");
  EXPECT_EQ(b.seam_colour(), 3u);
}

TEST(AxisData, ParseErrors) {
  const auto s4 = PermGroup::symmetric(4);
  EXPECT_THROW(axis(s4, "twist=(1 5); word=1,2"), ParseError);
  EXPECT_THROW(axis(s4, "twist=id; word="), ParseError);
  EXPECT_THROW(axis(s4, "twist=id; word=1,x"), ParseError);
  EXPECT_THROW(axis(s4, "twist=id"), ParseError);
  EXPECT_THROW(axis(s4, "colour=1; word=1,2"), ParseError);
}

TEST(ValidateAxis, Examples) {
  const auto s4 = PermGroup::symmetric(4);
  EXPECT_TRUE(validate_axis(axis(s4, "twist=id; word=1,2")).empty());
  EXPECT_FALSE(validate_axis(AxisData{s4, Permutation(4), {1, 1}}).empty());
  EXPECT_TRUE(validate_axis(AxisData{c3_on_5(), P("(1 2 3)", 5), {3}}).empty());
  // seam: twist(c_n) == c_1
  EXPECT_FALSE(validate_axis(AxisData{s4, Permutation(4), {1, 2, 1}}).empty());
  // twist outside F
  EXPECT_FALSE(validate_axis(AxisData{c3_on_5(), P("(1 2)", 5), {1, 4}}).empty());
  EXPECT_FALSE(validate_axis(AxisData{s4, Permutation(4), {}}).empty());
  EXPECT_FALSE(validate_axis(AxisData{s4, Permutation(4), {1, 5}}).empty());
  EXPECT_THROW(require_valid(AxisData{s4, Permutation(4), {2, 2}}), PreconditionError);
}

TEST(Scale, Examples) {
  EXPECT_EQ(scale(axis(PermGroup::symmetric(4), "twist=id; word=1,2")), 9u);
  EXPECT_EQ(scale(axis(PermGroup::trivial(4), "twist=id; word=1,2")), 1u);
  EXPECT_EQ(scale(axis(c3_on_5(), "twist=id; word=1,4")), 3u);
  EXPECT_EQ(scale(axis(PermGroup::symmetric(5), "twist=id; word=1,4")), 16u);
}

TEST(InverseAxis, Examples) {
  const auto s4 = PermGroup::symmetric(4);
  EXPECT_EQ(inverse_axis(axis(s4, "twist=id; word=1,2")).to_string(), "twist=id; word=2,1");
  const auto inv = inverse_axis(AxisData{c3_on_5(), P("(1 2 3)", 5), {3}});
  EXPECT_EQ(inv.twist, P("(1 3 2)", 5));
  EXPECT_EQ(inv.word, (std::vector<Point>{1}));
}

TEST(Modular, Examples) {
  EXPECT_EQ(modular(axis(PermGroup::symmetric(4), "twist=id; word=1,2")), Rational(1));
  EXPECT_EQ(modular(axis(PermGroup::trivial(4), "twist=id; word=1,2,3")), Rational(1));
  const auto a = axis(c3_on_5(), "twist=id; word=1,4");
  EXPECT_EQ(scale(inverse_axis(a)), 3u);
  EXPECT_EQ(modular(a), Rational(1));
}

TEST(Localisation, Examples) {
  const auto a = axis(PermGroup::symmetric(5), "twist=id; word=1,4");
  EXPECT_EQ(localized_scale(a, 2), 4u);
  EXPECT_EQ(localized_scale(a, 3), 3u);
  EXPECT_EQ(localized_scale(a, 5), 1u);
  EXPECT_EQ(localized_scale(a, 7), 1u);
  EXPECT_EQ(aggregate_scale(a), 12u);
  EXPECT_EQ(localized_modular(a, 3), Rational(1));

  // F(3) of Sym(6) is <(1 2 3), (4 5 6)>: |F(3)_4 . 1| = |F(3)_1 . 4| = 3.
  const auto b = axis(PermGroup::symmetric(6), "twist=id; word=1,4");
  EXPECT_EQ(localized_scale(b, 3), 9u);

  EXPECT_EQ(aggregate_scale(axis(PermGroup::trivial(5), "twist=id; word=1,4")), 1u);
  EXPECT_THROW(aggregate_scale(axis(PermGroup::symmetric(4), "twist=(1 2); word=1,3")), PreconditionError);
  EXPECT_THROW(localized_scale(axis(PermGroup::symmetric(4), "twist=(1 2 3); word=1,4"), 2), PreconditionError);
  EXPECT_THROW(localized_scale(a, 4), PreconditionError);
}

TEST(Localisation, DesignatedSylow) {
  EXPECT_TRUE(same_group(designated_sylow(PermGroup::symmetric(6), 3), sylow_of_symmetric(6, 3)));
  EXPECT_EQ(designated_sylow(PermGroup::alternating(4), 2).order(), 4u);
}

TEST(Builders, Examples) {
  const auto s4 = PermGroup::symmetric(4);
  EXPECT_EQ(scale(build_alternating(s4, 1, 2)), 9u);
  const auto s3 = PermGroup::symmetric(3);
  const auto t = build_tau_cycle(s3, P("(1 2 3)", 3), 1);
  EXPECT_EQ(t.to_string(), "twist=(1 2 3); word=1");
  EXPECT_EQ(scale(t), 2u);
  EXPECT_THROW(build_tau_cycle(s3, P("(2 3)", 3), 1), PreconditionError);
  EXPECT_THROW(build_alternating(s4, 2, 2), PreconditionError);
}

TEST(SymScaleCase, Table) {
  EXPECT_EQ(symscale_case(4, 5).localized, ExponentSet::zero_only);
  EXPECT_EQ(symscale_case(5, 5).localized, ExponentSet::zero_only);
  EXPECT_EQ(symscale_case(6, 3).localized, ExponentSet::even_naturals);
  EXPECT_EQ(symscale_case(4, 2).localized, ExponentSet::all_naturals);
  EXPECT_EQ(symscale_case(15, 5).localized, ExponentSet::naturals_minus_one);
  EXPECT_EQ(symscale_case(15, 5).to_string(), "T = N0 \\ {1}; S = {0}");
  EXPECT_EQ(symscale_case(4, 3).localized, ExponentSet::all_naturals);
  EXPECT_EQ(symscale_case(9, 3).localized, ExponentSet::all_naturals);
  EXPECT_EQ(symscale_case(7, 3).step, 1u);
  EXPECT_EQ(symscale_case(7, 3).to_string(), "T = N0; S = N0");
  EXPECT_EQ(symscale_case(10, 3).step, 2u);
  EXPECT_EQ(symscale_case(10, 3).to_string(), "T = N0; S = 2N0");
  EXPECT_TRUE(symscale_case(15, 5).localized_contains(0));
  EXPECT_FALSE(symscale_case(15, 5).localized_contains(1));
  EXPECT_TRUE(symscale_case(10, 3).ambient_contains(4));
  EXPECT_FALSE(symscale_case(10, 3).ambient_contains(3));
  EXPECT_THROW(symscale_case(2, 2), PreconditionError);
  EXPECT_THROW(symscale_case(5, 4), PreconditionError);
}

TEST(AxisProperty, InverseIsInvolutionAndUnimodular) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(3, 6)(rng);
    const auto pool = random_pool(k);
    const auto& f = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const auto a = verify::random_axis(f, 6, rng);
    const auto inv = inverse_axis(a);
    EXPECT_TRUE(validate_axis(inv).empty()) << a.to_string();
    const auto back = inverse_axis(inv);
    EXPECT_EQ(back.twist, a.twist);
    EXPECT_EQ(back.word, a.word);
    EXPECT_EQ(modular(a), Rational(1)) << a.to_string();
    EXPECT_EQ(scale(a), scale(a, suborbit_table(f)));
    EXPECT_EQ(AxisData::parse(a.to_string(), f).word, a.word);
  }
}

TEST(AxisProperty, LocalScaleIsAPPowerBelowScale) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(3, 7)(rng);
    const auto primes = primes_up_to(k);
    const auto p = primes[std::uniform_int_distribution<std::size_t>(0, primes.size() - 1)(rng)];
    const auto local = verify::random_axis(sylow_of_symmetric(k, p), 5, rng);
    const AxisData a{PermGroup::symmetric(k), local.twist, local.word};
    const auto s = localized_scale(a, p);
    EXPECT_EQ(s, scale(local));
    EXPECT_EQ(p_part(s, p), s);
    EXPECT_LE(s, scale(a));
  }
}
