#include <gtest/gtest.h>

#include "lrs/quad.hpp"
#include "lrs/recurrence.hpp"
#include "oracle.hpp"

using namespace lrs;

namespace {

QuadRat q(std::int64_t d, Rational x, Rational y) { return {d, std::move(x), std::move(y)}; }

QuadRat randomElement(std::mt19937_64& g, std::int64_t d, bool nonzero = false) {
  for (;;) {
    QuadRat v(d, Rational(oracle::uniform(g, -20, 20), oracle::uniform(g, 1, 6)),
              Rational(oracle::uniform(g, -20, 20), oracle::uniform(g, 1, 6)));
    if (!nonzero || !v.isZero()) return v;
  }
}

}  // namespace

TEST(QuadRat, Construction) {
  EXPECT_THROW(q(0, 1, 1), std::invalid_argument);
  EXPECT_THROW(q(9, 1, 1), std::invalid_argument);
  EXPECT_THROW(q(1, 1, 1), std::invalid_argument);
  // sqrt(8) = 2 sqrt(2)
  EXPECT_EQ(QuadRat::root(8), q(2, 0, 2));
  EXPECT_EQ(q(12, 1, Rational(1, 2)), q(3, 1, 1));
  EXPECT_EQ(q(2, Rational(2, 4), 0), q(2, Rational(1, 2), 0));
  EXPECT_EQ(q(-3, 0, 1).radicand(), -3);
  EXPECT_THROW(q(2, 1, 1) + q(3, 1, 1), std::invalid_argument);
  EXPECT_THROW(inv(q(2, 0, 0)), std::domain_error);
  EXPECT_THROW(q(2, 1, 1).toInteger(), std::domain_error);
  EXPECT_EQ(q(5, 4, 0).toInteger(), 4);
}

TEST(QuadRat, Examples) {
  EXPECT_EQ(q(2, 1, 1) * q(2, 1, -1), q(2, -1, 0));
  EXPECT_EQ(pow(q(2, 1, 1), 2), q(2, 3, 2));
  const QuadRat phi = goldenRatio();
  EXPECT_EQ(inv(phi), phi - Rational(1));
  EXPECT_EQ(-(conj(phi)), inv(phi));
  EXPECT_EQ(norm(q(2, 1, 1)), -1);
  EXPECT_EQ(trace(phi), 1);
}

TEST(QuadRat, FieldProperties) {
  auto g = oracle::rng(10);
  for (std::int64_t d : {2, 5, 13}) {
    for (int t = 0; t < 200; ++t) {
      const QuadRat a = randomElement(g, d), b = randomElement(g, d), c = randomElement(g, d);
      ASSERT_EQ(norm(a * b), norm(a) * norm(b));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(conj(a * b), conj(a) * conj(b));
      ASSERT_EQ(a * conj(a), QuadRat::rational(d, norm(a)));
    }
    for (int t = 0; t < 30; ++t) {
      const QuadRat a = randomElement(g, d, true);
      ASSERT_EQ(a * inv(a), QuadRat::rational(d, 1));
      for (std::int64_t n = 0; n <= 40; n += 7) ASSERT_EQ(pow(a, n) * pow(a, -n), QuadRat::rational(d, 1));
    }
  }
}

TEST(LucasRoots, Examples) {
  const auto pell = std::get<IrrationalRoots>(lucasRoots(2, 1));
  EXPECT_EQ(pell.alpha, q(2, 1, 1));
  EXPECT_EQ(pell.beta, q(2, 1, -1));
  EXPECT_EQ(pell.alpha * pell.beta, q(2, -1, 0));
  const auto fib = std::get<IrrationalRoots>(lucasRoots(1, 1));
  EXPECT_EQ(fib.alpha, goldenRatio());
  EXPECT_EQ(fib.alpha.radicand(), 5);
  EXPECT_EQ(fib.alpha * fib.beta, q(5, -1, 0));
  const auto r3 = std::get<IrrationalRoots>(lucasRoots(3, -1));
  EXPECT_EQ(r3.alpha, q(5, Rational(3, 2), Rational(1, 2)));
  EXPECT_EQ(r3.alpha + r3.beta, q(5, 3, 0));
  EXPECT_EQ(r3.alpha * r3.beta, q(5, 1, 0));
  // Delta = 9: rational roots 2 and -1 for X^2 - X - 2.
  const auto rational = std::get<RationalRoots>(lucasRoots(1, 2));
  EXPECT_EQ(rational.alpha, 2);
  EXPECT_EQ(rational.beta, -1);
  EXPECT_THROW(lucasRoots(2, -1), std::domain_error);
  EXPECT_EQ(discriminant(2, -1), 0);
}

TEST(Binet, Examples) {
  EXPECT_EQ(binetTerm(2, 1, LucasKind::First, 5), 29);
  EXPECT_EQ(binetTerm(1, 1, LucasKind::Second, 4), 7);
  for (auto [r, s] : {std::pair{2, 1}, std::pair{1, 1}, std::pair{3, -1}, std::pair{5, 3}})
    EXPECT_EQ(binetTerm(r, s, LucasKind::First, 0), 0);
}

TEST(Binet, AgreesWithIteration) {
  // (2,-1) has a double root and is covered by the error test below.
  for (auto [r, s] : {std::pair{2, 1}, std::pair{1, 1}, std::pair{3, -1}, std::pair{3, 1}, std::pair{1, 2}}) {
    const auto u = oracle::iterate({r, s}, {0, 1}, 201);
    const auto v = oracle::iterate({r, s}, {2, r}, 201);
    for (std::int64_t n = 0; n <= 200; ++n) {
      ASSERT_EQ(binetTerm(r, s, LucasKind::First, n), u[static_cast<std::size_t>(n)]) << r << "," << s << " n=" << n;
      ASSERT_EQ(binetTerm(r, s, LucasKind::Second, n), v[static_cast<std::size_t>(n)]) << r << "," << s << " n=" << n;
    }
  }
}

TEST(Binet, RejectsDoubleRootAndComplexCase) {
  EXPECT_THROW(binetTerm(2, -1, LucasKind::First, 3), std::domain_error);
  EXPECT_THROW(binetTerm(1, -1, LucasKind::First, 3), std::domain_error);
  EXPECT_THROW(closedFormConstant(1, -1, 3, 1), std::domain_error);
  EXPECT_THROW(closedFormConstant(1, 2, 3, 1), std::domain_error);
}

TEST(PhiPower, ExamplesAndLemma) {
  const QuadRat phi = goldenRatio();
  EXPECT_EQ(phiPower(1), phi);
  EXPECT_EQ(phiPower(2), phi + Rational(1));
  EXPECT_EQ(phiPower(10), phi * Rational(55) + Rational(34));
  const auto f = oracle::fib(301);
  for (std::int64_t n = 1; n <= 300; ++n)
    ASSERT_EQ(phiPower(n), phi * Rational(f[static_cast<std::size_t>(n)]) + Rational(f[static_cast<std::size_t>(n - 1)]));
  EXPECT_THROW(phiPower(0), std::invalid_argument);
}

TEST(ClosedForm, Examples) {
  EXPECT_EQ(closedFormConstant(2, 1, 8, 4), q(2, 24, 0));
  EXPECT_EQ(closedFormConstant(2, 1, 4, 2), q(2, 4, 0));
  EXPECT_EQ(closedFormConstant(1, 1, 6, 4), q(5, 4, 0));
  EXPECT_FALSE(closedFormConstant(2, 1, 4, 1).isRational());
}

TEST(ClosedForm, WindowFourCaseAnalysis) {
  for (std::int64_t r = 1; r <= 10; ++r) {
    EXPECT_EQ(closedFormConstant(r, 1, 4, 2).isRational(), r == 2) << "r=" << r;
    for (std::int64_t k : {3, 4}) EXPECT_FALSE(closedFormConstant(r, 1, 4, k).isRational()) << "r=" << r;
  }
}

TEST(ClosedForm, EvenWindowCoefficient) {
  // (3,-1), N=2: 1+3+8 = 12 = 4 U(2).
  EXPECT_EQ(evenWindowCoefficient(3, 2), q(5, 4, 0));
  for (std::int64_t r : {1, 3, 4})
    for (std::int64_t N = 0; N <= 12; N += 2) EXPECT_TRUE(evenWindowCoefficient(r, N).isInteger()) << r << " " << N;
  EXPECT_THROW(evenWindowCoefficient(3, 3), std::invalid_argument);
}
