#include <gtest/gtest.h>

#include "lrs/recurrence.hpp"
#include "lrs/tilings.hpp"
#include "oracle.hpp"

using namespace lrs;

namespace {

std::vector<std::string> encodeAll(const EnumerationResult& r, const TilingConfig& c) {
  std::vector<std::string> out;
  for (const auto& t : r.tilings) out.push_back(encode(t, c));
  return out;
}

}  // namespace

TEST(Tilings, SmallBoards) {
  TilingConfig c{1, 2, 2, 1};
  auto r = enumerate(c, {.list = true});
  EXPECT_EQ(r.count, 5u);
  EXPECT_EQ(encodeAll(r, c), (std::vector<std::string>{"B B", "B W", "W B", "W W", "G2"}));

  c.n = 0;
  r = enumerate(c, {.list = true});
  EXPECT_EQ(r.count, 1u);
  ASSERT_EQ(r.tilings.size(), 1u);
  EXPECT_TRUE(r.tilings[0].empty());

  c = {2, 3, 2, 1};
  r = enumerate(c, {.list = true});
  EXPECT_EQ(r.count, 9u);
  EXPECT_EQ(encodeAll(r, c).back(), "G3");

  c = {1, 2, 3, 2};
  r = enumerate(c, {.list = true});
  EXPECT_EQ(r.count, 11u);
  EXPECT_EQ(encodeAll(r, c).front(), "S0 S0");
  EXPECT_EQ(encodeAll(r, c).back(), "G2.1");
}

TEST(Tilings, ListingIsSortedAndCovering) {
  const TilingConfig c{2, 9, 2, 2};
  const auto r = enumerate(c, {.list = true});
  ASSERT_EQ(r.tilings.size(), r.count);
  for (const auto& t : r.tilings) {
    std::int64_t len = 0;
    for (const auto& p : t) len += p.length;
    ASSERT_EQ(len, c.n);
  }
  auto key = [](const Tiling& t) {
    std::vector<std::pair<int, std::int64_t>> k;
    for (const auto& p : t) k.emplace_back(p.kind == Piece::Kind::Square ? 0 : 1, p.type);
    return k;
  };
  for (std::size_t i = 1; i < r.tilings.size(); ++i) ASSERT_LT(key(r.tilings[i - 1]), key(r.tilings[i]));
}

TEST(Tilings, CountDP) {
  EXPECT_EQ(countDP({1, 15, 2, 1}), 470832);
  EXPECT_EQ(countDP({3, 0, 2, 1}), 1);
  EXPECT_THROW(countDP({0, 3, 2, 1}), std::invalid_argument);
  EXPECT_THROW(countDP({1, -1, 2, 1}), std::invalid_argument);
  EXPECT_THROW(countDP({1, 3, 0, 1}), std::invalid_argument);
  EXPECT_THROW(countDP({1, 3, 2, 0}), std::invalid_argument);
}

TEST(Tilings, EnumerationAgreesWithOracle) {
  auto g = oracle::rng(11);
  for (int t = 0; t < 80; ++t) {
    const TilingConfig c{oracle::uniform(g, 1, 4), oracle::uniform(g, 0, 12), oracle::uniform(g, 1, 3),
                         oracle::uniform(g, 1, 3)};
    const auto expected = oracle::countTilings(c.k, c.n, c.a, c.b);
    EXPECT_EQ(enumerate(c).count, expected) << c.k << " " << c.n << " " << c.a << " " << c.b;
    EXPECT_EQ(countDP(c), expected);
  }
}

TEST(Tilings, GeneralizedPellShift) {
  for (std::int64_t k = 1; k <= 5; ++k) {
    const auto p = terms(genPell(k, k - 1), 0, 200 + static_cast<std::size_t>(k) + 1);
    for (std::int64_t n = 0; n <= 200; ++n) ASSERT_EQ(countDP({k, n, 2, 1}), p[static_cast<std::size_t>(n + k)]);
  }
}

TEST(Tilings, Limits) {
  EXPECT_THROW(enumerate({1, 40, 2, 1}, {.list = false, .limit = 1000}), std::length_error);
  EXPECT_THROW(enumerate({1, 3, 5, 1}), std::invalid_argument);
  EXPECT_THROW(enumerate({1, 3, 2, 5}), std::invalid_argument);
}

TEST(BlockSum, Examples) {
  EXPECT_EQ(blockSum(1, 1, 1, 2, 1), 29);
  EXPECT_EQ(blockSum(1, 1, 0, 2, 1), 12);
  EXPECT_EQ(blockSumLiteral(1, 1, 1, 2, 1), 29);
}

TEST(BlockSum, CorrectedTermAgainstCounts) {
  for (std::int64_t k = 1; k <= 4; ++k)
    for (auto [a, b] : {std::pair{2, 1}, {1, 1}, {3, 2}, {2, 3}})
      for (std::int64_t n = 0; (k + 1) * n + k + 1 <= 16; ++n)
        for (std::int64_t r = 0; r <= k; ++r) {
          const BigInt expected = oracle::countTilings(k, (k + 1) * n + r + 1, a, b);
          ASSERT_EQ(blockSum(k, n, r, a, b), expected) << k << " " << n << " " << r << " " << a << " " << b;
          if (r < k || b == 1) ASSERT_EQ(blockSumLiteral(k, n, r, a, b), expected);
        }
  // With b > 1 the literal +1 is off by b^(n+1) - 1.
  EXPECT_NE(blockSumLiteral(1, 1, 1, 3, 2), countDP({1, 4, 3, 2}));
  EXPECT_EQ(countDP({1, 4, 3, 2}) - blockSumLiteral(1, 1, 1, 3, 2), 3);
}

TEST(BlockSum, Check) {
  auto r = blockSumCheck(3, 120, 2, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.checked, 0u);
  EXPECT_TRUE(blockSumCheck(2, 80, 3, 2).passed());
  EXPECT_TRUE(blockSumCheck(1, 60, 1, 1).passed());
  EXPECT_THROW(blockSumCheck(0, 10, 2, 1), std::invalid_argument);
}
