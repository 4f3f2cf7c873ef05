#include "multbound/global_bounds.hpp"
#include "multbound/published.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace multbound;

namespace {

struct Naive {
  BigInt best = 0;
  std::vector<std::vector<int>> argmax;
};

// Every non-increasing tuple with entries in [0, a] and length in [1, a],
// filtered by the admissibility rule written out independently.
Naive naive_total(int a) {
  Naive out;
  std::vector<int> b;
  std::function<void(int)> walk = [&](int cap) {
    if (!b.empty()) {
      long long budget = static_cast<long long>(b.size());
      bool ok = true;
      for (std::size_t i = 0; i < b.size(); ++i) {
        const int j = static_cast<int>(i) + 1;
        if (b[i] >= j) budget += (b[i] + 1LL) * (b[i] + 1 - j);
        ok = ok && a - b[i] >= b[i] * b[i];
      }
      // The r* cut-off is implicit: entries with b_j < j add nothing.
      if (ok && budget <= a) {
        BigInt score = 0;
        for (const int bi : b) score += mubar({a - bi, bi});
        if (score > out.best) {
          out.best = score;
          out.argmax.clear();
        }
        if (score == out.best) out.argmax.push_back(b);
      }
    }
    if (static_cast<int>(b.size()) == a) return;
    for (int v = cap; v >= 0; --v) {
      b.push_back(v);
      walk(v);
      b.pop_back();
    }
  };
  walk(a);
  return out;
}

}  // namespace

TEST(Profile, RStarAndPhi) {
  EXPECT_EQ(r_star({2, 2, 1}), 2);
  EXPECT_EQ(phi({2, 2, 1}), 9);
  EXPECT_EQ(r_star({0, 0}), 0);
  EXPECT_EQ(phi({0, 0}), 0);
  EXPECT_EQ(r_star({}), 0);
  EXPECT_EQ(r_star(std::vector<int>(12, 3)), 3);
  EXPECT_EQ(phi(std::vector<int>(12, 3)), 24);
  EXPECT_EQ(r_star({5, 1, 1}), 1);
  EXPECT_EQ(phi({5, 1, 1}), 30);
  EXPECT_THROW(r_star({1, 2}), NotSorted);
  EXPECT_THROW(phi({1, -1}), NotSorted);
}

TEST(Profile, Admissibility) {
  EXPECT_TRUE(is_admissible_profile(16, Profile{std::vector<int>(7, 2)}));
  EXPECT_FALSE(is_admissible_profile(16, Profile{std::vector<int>(8, 2)}));
  EXPECT_TRUE(is_admissible_profile(36, Profile{std::vector<int>(12, 3)}));
  EXPECT_FALSE(is_admissible_profile(3, Profile{{}}));
  EXPECT_FALSE(is_admissible_profile(10, Profile{{1, 2}}));
  // (a - b, b) leaves U: 7 - 3 < 9.
  EXPECT_FALSE(is_admissible_profile(7, Profile{{3}}));
}

TEST(Profile, Score) {
  EXPECT_EQ(profile_score(16, Profile{std::vector<int>(7, 2)}), 308);
  EXPECT_EQ(profile_score(36, Profile{std::vector<int>(12, 3)}), 7980);
  EXPECT_EQ(profile_score(3, Profile{{0, 0, 0}}), 3);
  EXPECT_THROW(profile_score(16, Profile{std::vector<int>(8, 2)}), InadmissibleProfile);
}

TEST(Profile, Text) {
  EXPECT_EQ(to_string(Profile{std::vector<int>(12, 3)}), "r=12, b=3×12");
  EXPECT_EQ(to_string(Profile{{2, 1, 0}}), "r=3, b=(2,1,0)");
}

TEST(MubarTotal, Examples) {
  EXPECT_EQ(mubar_total(1).value, 1);
  EXPECT_EQ(mubar_total(16).value, 308);
  EXPECT_EQ(mubar_total(36).value, 7980);
  EXPECT_EQ(mubar_total(10).value, 80);
  EXPECT_EQ(mubar_total(11).value, 99);
  EXPECT_THROW(mubar_total(0), DomainError);
}

// The two rows where the printed table and the stated definition part ways.
TEST(MubarTotal, RowsThatDisagreeWithPrintedTable) {
  const auto row4 = mubar_total(4);
  EXPECT_EQ(row4.value, 8);
  const auto row15 = mubar_total(15);
  EXPECT_EQ(row15.value, 228);
  ASSERT_FALSE(row15.maximizers.empty());
  EXPECT_EQ(row15.maximizers.front(), Profile{std::vector<int>(6, 2)});
  const Profile printed{std::vector<int>(13, 1)};
  EXPECT_TRUE(is_admissible_profile(15, printed));
  EXPECT_EQ(profile_score(15, printed), 195);
}

TEST(MubarTotal, MatchesNaiveEnumeration) {
  for (int a = 1; a <= 14; ++a) {
    const Naive oracle = naive_total(a);
    const GlobalRow row = mubar_total(a);
    ASSERT_EQ(row.value, oracle.best) << a;
    ASSERT_EQ(row.maximizers.size(), oracle.argmax.size()) << a;
    for (const Profile& p : row.maximizers) {
      EXPECT_EQ(profile_score(a, p), row.value);
      EXPECT_NE(std::find(oracle.argmax.begin(), oracle.argmax.end(), p.b), oracle.argmax.end());
    }
  }
}

TEST(MubarTotal, MaximizerOrdering) {
  for (int a = 1; a <= 30; ++a) {
    const auto row = mubar_total(a);
    for (std::size_t i = 1; i < row.maximizers.size(); ++i) {
      const Profile& x = row.maximizers[i - 1];
      const Profile& y = row.maximizers[i];
      EXPECT_TRUE(x.r() < y.r() || (x.r() == y.r() && x.b > y.b)) << a;
    }
  }
}

TEST(MubarTotal, Superadditive) {
  std::vector<BigInt> t{0};
  for (int a = 1; a <= 30; ++a) t.push_back(mubar_total(a).value);
  for (int x = 1; x <= 30; ++x) {
    for (int y = 1; x + y <= 30; ++y) EXPECT_GE(t[x + y], t[x] + t[y]) << x << "+" << y;
  }
}

TEST(MubarTotal, PrintedMaximizersUseWholeBudget) {
  const auto published = load_published(MULTBOUND_PUBLISHED_TABLES);
  for (const auto& g : published.global) {
    if (g.excluded || g.a == 15) continue;
    EXPECT_EQ(phi(g.maximizer.b) + g.maximizer.r(), g.a) << g.a;
    EXPECT_EQ(profile_score(g.a, g.maximizer), g.value) << g.a;
  }
}

TEST(MubarTotal, MaxPointsCap) {
  const auto capped = mubar_total(16, GlobalOptions{3});
  for (const Profile& p : capped.maximizers) EXPECT_LE(p.r(), 3);
  EXPECT_LT(capped.value, 308);
  EXPECT_EQ(mubar_total(16, GlobalOptions{7}).value, 308);
  // One point with b = 1: Phi + r = 2 + 1 <= 3, score mubar(2,1) = 3.
  EXPECT_EQ(mubar_total(3, GlobalOptions{1}).value, 3);
  EXPECT_EQ(mubar_total(2, GlobalOptions{1}).value, 1);
  EXPECT_THROW(mubar_total(5, GlobalOptions{0}), DomainError);
}

TEST(GlobalTable, DiscrepancyNotes) {
  const std::map<int, BigInt> published{{4, 6}, {5, 15}, {15, 195}};
  const auto rows = global_table(16, published);
  ASSERT_EQ(rows.size(), 16U);
  EXPECT_EQ(rows[3].discrepancy, "computed 8, published 6");
  EXPECT_FALSE(rows[4].discrepancy.has_value());
  EXPECT_EQ(rows[14].discrepancy, "computed 228, published 195");
  EXPECT_THROW(global_table(0), DomainError);
}
