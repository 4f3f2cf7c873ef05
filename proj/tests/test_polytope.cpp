#include "multbound/polytope.hpp"

#include <gtest/gtest.h>

#include <array>

using namespace multbound;

namespace {

// Counts points of the box [0, budget]^b that satisfy the inequality.
// Deliberately wasteful; only used for small b.
long long box_count(int a, int b) {
  const long long budget = static_cast<long long>(a) - static_cast<long long>(b) * b;
  if (budget < 0) return 0;
  std::vector<long long> x(static_cast<std::size_t>(b), 0);
  long long count = 0;
  while (true) {
    long long total = 0;
    for (int i = 0; i < b; ++i) total += (b - i) * x[static_cast<std::size_t>(i)];
    if (total <= budget) ++count;
    int i = 0;
    while (i < b && x[static_cast<std::size_t>(i)] == budget) x[static_cast<std::size_t>(i++)] = 0;
    if (i == b) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return count;
}

}  // namespace

TEST(Lattice, Examples) {
  EXPECT_EQ(lattice_count(4, 2), 1);
  EXPECT_EQ(lattice_count(16, 2), 49);
  EXPECT_EQ(lattice_count(36, 6), 1);
  EXPECT_EQ(lattice_count(5, 1), 5);
  EXPECT_THROW(lattice_count(3, 2), InadmissiblePair);
  EXPECT_THROW(delta_simplex(5, 0), DomainError);
}

TEST(Lattice, MatchesBoxEnumeration) {
  for (int b = 1; b <= 4; ++b) {
    for (int a = b * b; a <= b * b + 12; ++a) {
      EXPECT_EQ(lattice_count(a, b), BigInt(box_count(a, b))) << a << "," << b;
    }
  }
}

TEST(Lattice, Membership) {
  const SimplexSpec s = delta_simplex(12, 3);
  EXPECT_EQ(s.budget, 3);
  const std::array<long long, 3> inside{1, 0, 0};
  const std::array<long long, 3> edge{0, 1, 1};
  const std::array<long long, 3> outside{1, 0, 1};
  const std::array<long long, 2> wrong_dim{0, 0};
  EXPECT_TRUE(s.contains(inside));
  EXPECT_TRUE(s.contains(edge));
  EXPECT_FALSE(s.contains(outside));
  EXPECT_FALSE(s.contains(wrong_dim));
  const std::array<long long, 3> negative{-1, 0, 0};
  EXPECT_FALSE(s.contains(negative));
}

TEST(Lattice, MonotoneInA) {
  for (int b = 1; b <= 5; ++b) {
    for (int a = b * b; a < 50; ++a) EXPECT_LE(lattice_count(a, b), lattice_count(a + 1, b));
  }
}

TEST(Volume, Examples) {
  EXPECT_EQ(volume_plus(4, 2), Rational(9, 4));
  EXPECT_EQ(volume_plus(36, 6), Rational(pow_int(21, 6), 518400));
  EXPECT_EQ(volume_plus(1, 1), Rational(1));
  EXPECT_THROW(volume_plus(0, 3), DomainError);
  EXPECT_THROW(volume_plus(5, 0), DomainError);
}

TEST(Volume, DominatesLatticeCount) {
  for (int a = 1; a <= 60; ++a) {
    for (int b = 1; b * b <= a; ++b) {
      const auto c = verify_lattice_volume_bound(a, b);
      EXPECT_TRUE(c.holds) << a << "," << b;
      EXPECT_EQ(c.claim_id, "lattice-count-le-volume");
      EXPECT_EQ(c.context.at("a"), std::to_string(a));
    }
  }
}
