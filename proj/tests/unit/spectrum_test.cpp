#include <gtest/gtest.h>

#include <random>
#include <set>

#include "locscale/errors.hpp"
#include "locscale/supernatural.hpp"
#include "locscale/sylow.hpp"
#include "locscale/verify.hpp"

using namespace locscale;

namespace {

using Entries = std::vector<std::uint64_t>;

SpectrumOptions values(std::size_t max_len, std::uint64_t cap = 0) {
  SpectrumOptions o;
  o.max_len = max_len;
  o.cap = cap;
  return o;
}

SpectrumOptions exponents(std::uint64_t p, std::size_t max_len, std::uint64_t cap = 0) {
  SpectrumOptions o;
  o.mode = SpectrumMode::exponents;
  o.prime = p;
  o.max_len = max_len;
  o.cap = cap;
  return o;
}

// Brute force: scale of every valid axis up to the length bound.
std::set<std::uint64_t> enumerate_scales(const PermGroup& f, std::size_t max_len) {
  std::set<std::uint64_t> out{1};
  for (const auto& a : verify::all_axes(f, max_len)) out.insert(scale(a));
  return out;
}

PermGroup random_group(std::mt19937_64& rng) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(3, 5)(rng);
  std::vector<Permutation> gens;
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Point> images(k);
    for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<Point>(i + 1);
    std::shuffle(images.begin(), images.end(), rng);
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(k, std::move(gens));
}

}  // namespace

TEST(Spectrum, Examples) {
  EXPECT_EQ(scale_spectrum(PermGroup::symmetric(3), values(4)).entries, (Entries{1, 2, 4, 8, 16}));
  EXPECT_EQ(scale_spectrum(PermGroup::trivial(4), values(5)).entries, (Entries{1}));
  EXPECT_EQ(scale_spectrum(sylow_of_symmetric(6, 3), exponents(3, 6)).entries, (Entries{0, 2, 4, 6}));
}

TEST(Spectrum, ReportFields) {
  const auto s = scale_spectrum(sylow_of_symmetric(6, 3), exponents(3, 6));
  EXPECT_EQ(s.mode, SpectrumMode::exponents);
  EXPECT_EQ(s.prime, 3u);
  EXPECT_EQ(s.max_len, 6u);
  EXPECT_EQ(s.cap, kDefaultExponentCap);
  EXPECT_FALSE(s.truncated);
  const auto v = scale_spectrum(PermGroup::symmetric(3), values(4));
  EXPECT_EQ(v.cap, kDefaultValueCap);
  EXPECT_FALSE(v.prime.has_value());
}

TEST(Spectrum, CapsSetTruncated) {
  const auto v = scale_spectrum(PermGroup::symmetric(3), values(4, 5));
  EXPECT_EQ(v.entries, (Entries{1, 2, 4}));
  EXPECT_TRUE(v.truncated);
  const auto e = scale_spectrum(sylow_of_symmetric(6, 3), exponents(3, 8, 4));
  EXPECT_EQ(e.entries, (Entries{0, 2, 4}));
  EXPECT_TRUE(e.truncated);
  EXPECT_TRUE(scale_spectrum(PermGroup::symmetric(12), values(8)).truncated);
}

TEST(Spectrum, Preconditions) {
  EXPECT_THROW(scale_spectrum(PermGroup::symmetric(4), exponents(4, 3)), PreconditionError);
  EXPECT_THROW(scale_spectrum(PermGroup::symmetric(4), values(0)), PreconditionError);
}

TEST(SpectrumProperty, MatchesBruteForceEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_group(rng);
    const auto expected = enumerate_scales(f, 3);
    const auto got = scale_spectrum(f, values(3)).entries;
    EXPECT_EQ(std::set<std::uint64_t>(got.begin(), got.end()), expected) << f.to_string();
  }
  for (std::size_t k = 3; k <= 4; ++k) {
    for (const auto& f : verify::cyclic_subgroups(k)) {
      const auto got = scale_spectrum(f, values(3)).entries;
      EXPECT_EQ(std::set<std::uint64_t>(got.begin(), got.end()), enumerate_scales(f, 3)) << f.to_string();
    }
  }
}

TEST(SpectrumProperty, StartColourPartsMergeToWhole) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_group(rng);
    std::set<std::uint64_t> merged{1};
    for (Point c = 1; c <= f.degree(); ++c) {
      for (auto v : scale_spectrum_from(f, values(4), c).entries) merged.insert(v);
    }
    const auto whole = scale_spectrum(f, values(4)).entries;
    EXPECT_EQ(merged, std::set<std::uint64_t>(whole.begin(), whole.end()));
  }
}

TEST(SpectrumProperty, MonotoneInLength) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_group(rng);
    Entries previous;
    for (std::size_t len = 1; len <= 6; ++len) {
      const auto now = scale_spectrum(f, values(len)).entries;
      EXPECT_TRUE(std::includes(now.begin(), now.end(), previous.begin(), previous.end()));
      previous = now;
    }
  }
}

TEST(SpectrumProperty, ExponentModeIsValuationOfValues) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_group(rng);
    for (auto p : primes_up_to(f.degree())) {
      const auto vals = scale_spectrum(f, values(5));
      ASSERT_FALSE(vals.truncated);
      std::set<std::uint64_t> expected;
      for (auto v : vals.entries) expected.insert(valuation(v, p));
      const auto got = scale_spectrum(f, exponents(p, 5)).entries;
      EXPECT_EQ(std::set<std::uint64_t>(got.begin(), got.end()), expected);
    }
  }
}
