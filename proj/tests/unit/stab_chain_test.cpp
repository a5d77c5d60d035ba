#include <gtest/gtest.h>

#include <random>

#include "locscale/stab_chain.hpp"

using namespace locscale;

TEST(StabChain, BaseStartsWithPrefix) {
  std::vector<Permutation> gens{Permutation::parse("(1 2 3 4 5)", 5), Permutation::parse("(1 2)", 5)};
  std::vector<Point> prefix{3};
  StabChain chain(5, gens, prefix);
  ASSERT_FALSE(chain.base().empty());
  EXPECT_EQ(chain.base().front(), 3u);
  EXPECT_EQ(chain.order(), 120u);
}

TEST(StabChain, StripSiftsMembersToIdentity) {
  std::vector<Permutation> gens{Permutation::parse("(1 2 3)", 6), Permutation::parse("(4 5 6)", 6)};
  StabChain chain(6, gens);
  EXPECT_EQ(chain.order(), 9u);
  const auto [residue, level] = chain.strip(Permutation::parse("(1 3 2)(4 6 5)", 6));
  EXPECT_TRUE(residue.is_identity());
  EXPECT_TRUE(chain.contains(Permutation::parse("(1 2 3)(4 6 5)", 6)));
  EXPECT_FALSE(chain.contains(Permutation::parse("(1 2)", 6)));
}

TEST(StabChain, TrivialGroup) {
  StabChain chain(4, {});
  EXPECT_EQ(chain.order(), 1u);
  EXPECT_TRUE(chain.contains(Permutation(4)));
  EXPECT_FALSE(chain.contains(Permutation::parse("(1 2)", 4)));
}

TEST(StabChain, LargeSymmetricGroupOrder) {
  std::vector<Permutation> gens{Permutation::parse("(1 2)", 15),
                                Permutation::parse("(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15)", 15)};
  StabChain chain(15, gens);
  EXPECT_EQ(chain.order(), 1307674368000ULL);
}

TEST(StabChainProperty, OrbitsAndTransversalsConsistent) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
    std::vector<Permutation> gens;
    for (int g = 0; g < 2; ++g) {
      std::vector<Point> images(k);
      for (std::size_t i = 0; i < k; ++i) images[i] = static_cast<Point>(i + 1);
      std::shuffle(images.begin(), images.end(), rng);
      gens.push_back(Permutation::from_images(images));
    }
    StabChain chain(k, gens);
    std::uint64_t product = 1;
    for (const auto& level : chain.levels()) {
      product *= level.orbit.size();
      for (std::size_t idx = 0; idx < level.orbit.size(); ++idx) {
        const Point pt = level.orbit[idx];
        const int slot = level.slot[pt - 1];
        ASSERT_GE(slot, 0);
        EXPECT_EQ(level.transversal[static_cast<std::size_t>(slot)](level.base), pt);
      }
    }
    EXPECT_EQ(product, chain.order());
    for (const auto& g : gens) EXPECT_TRUE(chain.contains(g));
  }
}
