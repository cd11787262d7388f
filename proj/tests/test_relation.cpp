#include <gtest/gtest.h>

#include "lrs/recurrence.hpp"
#include "lrs/relation.hpp"
#include "oracle.hpp"

using namespace lrs;

namespace {

SearchOptions opts(std::int64_t horizon, std::optional<std::int64_t> nMin = std::nullopt) {
  SearchOptions o;
  o.horizon = horizon;
  o.nMin = nMin;
  return o;
}

struct Expect {
  std::int64_t N;
  long C;
  std::int64_t k;
};

void expectClassification(const std::vector<RelationVerdict>& vs, const std::vector<Expect>& expected) {
  std::size_t next = 0;
  for (const auto& v : vs) {
    if (!v.found()) continue;
    ASSERT_LT(next, expected.size()) << "unexpected relation at N=" << v.window;
    EXPECT_EQ(v.window, expected[next].N);
    EXPECT_EQ(*v.constant, expected[next].C) << "N=" << v.window;
    EXPECT_EQ(*v.offset, expected[next].k) << "N=" << v.window;
    ++next;
  }
  EXPECT_EQ(next, expected.size());
}

}  // namespace

TEST(Search, Examples) {
  auto v = searchRelation(pell(), 4, opts(100, 1));
  ASSERT_TRUE(v.found());
  EXPECT_EQ(*v.constant, 4);
  EXPECT_EQ(*v.offset, 2);

  v = searchRelation(pell(), 6, opts(100, 1));
  EXPECT_EQ(v.status, RelationStatus::NotFound);
  EXPECT_EQ(v.witnesses.size(), 9u);  // offsets 0..8
  for (const auto& w : v.witnesses) {
    EXPECT_GT(w.failingN, w.referenceN);
    ASSERT_TRUE(w.failingRatio.has_value());
    EXPECT_NE(*w.failingRatio, w.referenceRatio);
  }

  v = searchRelation(fibonacci(), 3, opts(100, 1));
  ASSERT_TRUE(v.found());
  EXPECT_EQ(*v.constant, 2);
  EXPECT_EQ(*v.offset, 2);

  v = searchRelation(pell(), 1, opts(100, 1));
  ASSERT_TRUE(v.found());
  EXPECT_EQ(*v.constant, 1);
  EXPECT_EQ(*v.offset, 0);
}

TEST(Search, DefaultNMinIsSupportStart) {
  EXPECT_EQ(supportStart(pell()), 1);
  EXPECT_EQ(supportStart(lucas()), 0);
  EXPECT_EQ(supportStart(genPell(3, 2)), 3);
  EXPECT_EQ(searchRelation(genPell(2, 1), 6).nMin, 2);
}

TEST(Search, Classify) {
  expectClassification(classify(pell(), 12, opts(150, 1)), {{1, 1, 0}, {4, 4, 2}, {8, 24, 4}, {12, 140, 6}});
  // The N=10 offset is 6: the window of 4N+2 = 10 terms collapses onto F(n+2N+2).
  expectClassification(classify(fibonacci(), 12, opts(150, 1)),
                       {{1, 1, 0}, {2, 1, 2}, {3, 2, 2}, {6, 4, 4}, {10, 11, 6}});
  const auto lucasVerdicts = classify(lucas(), 6, opts(150, 1));
  ASSERT_TRUE(lucasVerdicts[5].found());
  EXPECT_EQ(*lucasVerdicts[5].constant, 4);
  EXPECT_EQ(*lucasVerdicts[5].offset, 4);
}

TEST(Search, StatusVariants) {
  // 2^n: sums of two terms are 3/2 of the next term.
  const RecurrenceSpec pow2({2}, {BigInt(1)}, "pow2");
  SearchOptions o = opts(60);
  o.offsetRange = std::pair<std::int64_t, std::int64_t>{1, 1};
  auto v = searchRelation(pow2, 2, o);
  EXPECT_EQ(v.status, RelationStatus::NonIntegerConstant);
  EXPECT_EQ(*v.ratio, Rational(3, 2));
  EXPECT_FALSE(v.constant.has_value());

  // (-2)^n: u(n) + u(n+1) = -u(n).
  const RecurrenceSpec alt({-2}, {BigInt(1)}, "alt");
  o.offsetRange = std::pair<std::int64_t, std::int64_t>{0, 0};
  v = searchRelation(alt, 2, o);
  EXPECT_EQ(v.status, RelationStatus::NonPositiveConstant);
  EXPECT_EQ(*v.ratio, -1);

  // (-1)^n: every pair sums to zero.
  const RecurrenceSpec sign({-1}, {BigInt(1)}, "sign");
  EXPECT_EQ(searchRelation(sign, 2, opts(50)).status, RelationStatus::Unsupported);

  EXPECT_THROW(searchRelation(pell(), 0), std::invalid_argument);
  EXPECT_THROW(searchRelation(pell(), 3, opts(3, 1)), std::invalid_argument);
  SearchOptions bad = opts(50);
  bad.offsetRange = std::pair<std::int64_t, std::int64_t>{4, 2};
  EXPECT_THROW(searchRelation(pell(), 3, bad), std::invalid_argument);
}

TEST(Search, ZeroTargetsUseCrossMultiplication) {
  // U(1,-1) = 0,1,1,0,-1,-1,0,...: zero terms inside the sweep.
  const auto v = searchRelation(lucasU(1, -1), 3, opts(60));
  EXPECT_NE(v.status, RelationStatus::NotFound);
  EXPECT_TRUE(v.found() || v.status == RelationStatus::NonPositiveConstant ||
              v.status == RelationStatus::Unsupported);
}

TEST(Search, ScanR4OnlyAtTwo) {
  const auto rows = scanR4(10, opts(150));
  ASSERT_EQ(rows.size(), 10u);
  for (const auto& row : rows) {
    EXPECT_EQ(row.verdict.found(), row.r == 2) << "r=" << row.r;
    if (row.r == 2) {
      EXPECT_EQ(*row.verdict.constant, 4);
      EXPECT_EQ(*row.verdict.offset, 2);
    }
  }
}

TEST(Search, LucasFamily) {
  const auto rows = lucasFamilyScan(3, 3, {-1, 1}, 12, opts(150));
  for (const auto& row : rows) {
    if (row.s == 1) EXPECT_FALSE(row.verdict.found()) << "window " << row.verdict.window;
    if (row.s == -1 && row.verdict.window == 3) {
      ASSERT_TRUE(row.verdict.found());
      EXPECT_EQ(*row.verdict.constant, 4);
      EXPECT_EQ(*row.verdict.offset, 1);
    }
    // s = -1: odd windows N+1 with N even carry a relation onto U(n + N/2).
    if (row.s == -1 && row.verdict.window % 2 == 1) {
      ASSERT_TRUE(row.verdict.found()) << "window " << row.verdict.window;
      EXPECT_EQ(*row.verdict.offset, (row.verdict.window - 1) / 2);
    }
  }
  // r = 1 matches the Fibonacci classification.
  const auto fibRows = lucasFamilyScan(1, 1, {1}, 12, opts(150));
  const auto fib = classify(fibonacci(), 12, opts(150));
  for (const auto& row : fibRows) EXPECT_EQ(row.verdict.found(), fib[static_cast<std::size_t>(row.verdict.window - 1)].found());
  EXPECT_TRUE(lucasFamilyScan(0, 0, {1}, 4).empty());
}

TEST(Analytic, Examples) {
  auto a = analyticCheck(2, 1, 8, 4);
  EXPECT_EQ(a.kind, ConstantKind::Integer);
  EXPECT_EQ(a.value.toInteger(), 24);
  EXPECT_EQ(analyticCheck(2, 1, 4, 1).kind, ConstantKind::Irrational);
  a = analyticCheck(1, 1, 2, 2);
  EXPECT_EQ(a.kind, ConstantKind::Integer);
  EXPECT_EQ(a.value.toInteger(), 1);
  for (std::int64_t k = 3; k <= 6; ++k) EXPECT_EQ(analyticCheck(2, 1, 6, k).kind, ConstantKind::Irrational);
  EXPECT_THROW(analyticCheck(1, -1, 3, 1), std::domain_error);
}

TEST(Properties, RandomOrderTwoFamiliesAgreeWithOracle) {
  auto g = oracle::rng(20);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t r = oracle::uniform(g, 1, 6);
    const std::int64_t s = oracle::uniform(g, 0, 1) ? 1 : -1;
    const auto spec = lucasU(r, s);
    const auto u = oracle::iterate({r, s}, {0, 1}, 140);
    for (std::int64_t N = 1; N <= 12; ++N) {
      const auto v = searchRelation(spec, N, opts(100, 1));
      const auto o = oracle::findRelation(u, static_cast<std::size_t>(N), 1, 100);
      ASSERT_EQ(v.found(), o.has_value()) << spec.label() << " N=" << N;
      if (!o) continue;
      EXPECT_EQ(*v.constant, o->constant);
      EXPECT_EQ(*v.offset, o->offset);
      // The offset band is a statement about s = +1 only.
      if (s == 1 && N >= 2) EXPECT_TRUE(offsetInBand(N, *v.offset)) << spec.label() << " N=" << N;
      // Periodic (Delta < 0) and linear (Delta = 0) members can repeat offsets.
      if (discriminant(r, s) > 0 && exactSqrt(discriminant(r, s)) < 0) {
        EXPECT_TRUE(v.otherOffsets.empty()) << spec.label() << " N=" << N;
        const auto a = analyticCheck(r, s, N, *v.offset);
        EXPECT_EQ(a.kind, ConstantKind::Integer);
        EXPECT_EQ(a.value.toInteger(), *v.constant);
      }
    }
  }
}

TEST(Properties, FoundRelationsHoldOverTheWholeSweep) {
  for (const auto& spec : {pell(), fibonacci(), lucas(), pellLucas(), genPell(2, 1), genFib(3)}) {
    const TermTable t(spec, 260);
    for (const auto& v : classify(spec, 14, opts(200))) {
      if (!v.found()) continue;
      for (std::int64_t n = v.nMin; n <= v.horizon; ++n)
        ASSERT_EQ(t.window(n, v.window), *v.constant * t[n + *v.offset]) << spec.label() << " N=" << v.window;
    }
  }
}

TEST(Properties, NoNonIntegerConstantsForCoprimeInitialValues) {
  for (std::int64_t r = 1; r <= 6; ++r)
    for (const auto& v : classify(lucasU(r, 1), 16, opts(150)))
      EXPECT_NE(v.status, RelationStatus::NonIntegerConstant) << "r=" << r << " N=" << v.window;
}

TEST(Properties, PellOddWindowSandwich) {
  const auto P = oracle::pell(140);
  for (std::size_t N = 3; N <= 15; N += 2)
    for (std::size_t n = 1; n <= 100; ++n) {
      const auto s = oracle::window(P, n, N);
      ASSERT_LT(P[n + N - 1], s);
      ASSERT_LT(s, P[n + N]);
    }
}

TEST(Offsets, Band) {
  EXPECT_TRUE(offsetInBand(4, 2));
  EXPECT_TRUE(offsetInBand(3, 2));
  EXPECT_FALSE(offsetInBand(3, 1));
  EXPECT_TRUE(offsetInBand(10, 10));
  EXPECT_FALSE(offsetInBand(10, 11));
  EXPECT_EQ(toString(RelationStatus::Unsupported), "unsupported-index-range");
}
