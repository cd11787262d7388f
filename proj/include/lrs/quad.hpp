#pragma once

// Exact arithmetic in Q(sqrt(D)): elements x + y*sqrt(D) with rational x, y.
// Used for Binet formulas, golden-ratio powers and the closed-form window
// constant sum_{i<N} alpha^(i-k).

#include <cstdint>
#include <string>
#include <variant>

#include "lrs/numeric.hpp"

namespace lrs {

class QuadRat {
 public:
  /// x + y*sqrt(radicand). The radicand is reduced to its squarefree part
  /// (the square factor moves into y). Throws std::invalid_argument when the
  /// radicand is zero or a perfect square.
  QuadRat(std::int64_t radicand, Rational x, Rational y);

  static QuadRat rational(std::int64_t radicand, Rational x) { return {radicand, std::move(x), Rational(0)}; }
  /// sqrt(radicand) as a field element.
  static QuadRat root(std::int64_t radicand) { return {radicand, Rational(0), Rational(1)}; }

  std::int64_t radicand() const noexcept { return radicand_; }
  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }

  bool isRational() const { return y_ == 0; }
  bool isInteger() const { return isRational() && lrs::isInteger(x_); }
  bool isZero() const { return x_ == 0 && y_ == 0; }
  /// Throws std::domain_error unless the element is a rational integer.
  BigInt toInteger() const;

  std::string str() const;

  QuadRat& operator+=(const QuadRat& other);
  QuadRat& operator-=(const QuadRat& other);
  QuadRat& operator*=(const QuadRat& other);

  friend QuadRat operator+(QuadRat a, const QuadRat& b) { return a += b; }
  friend QuadRat operator-(QuadRat a, const QuadRat& b) { return a -= b; }
  friend QuadRat operator*(QuadRat a, const QuadRat& b) { return a *= b; }
  friend QuadRat operator-(const QuadRat& a) { return {a.radicand_, -a.x_, -a.y_}; }
  friend QuadRat operator*(QuadRat a, const Rational& q) {
    a.x_ *= q;
    a.y_ *= q;
    return a;
  }
  friend QuadRat operator+(QuadRat a, const Rational& q) {
    a.x_ += q;
    return a;
  }
  friend QuadRat operator-(QuadRat a, const Rational& q) {
    a.x_ -= q;
    return a;
  }

  friend bool operator==(const QuadRat& a, const QuadRat& b) {
    return a.radicand_ == b.radicand_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  void requireSameField(const QuadRat& other) const;

  std::int64_t radicand_;
  Rational x_;
  Rational y_;
};

QuadRat conj(const QuadRat& v);
/// x^2 - D y^2.
Rational norm(const QuadRat& v);
/// 2x.
Rational trace(const QuadRat& v);
/// Throws std::domain_error on zero.
QuadRat inv(const QuadRat& v);
/// Binary exponentiation; negative exponents go through inv().
QuadRat pow(const QuadRat& base, std::int64_t exponent);
Rational pow(const Rational& base, std::int64_t exponent);

struct IrrationalRoots {
  QuadRat alpha;
  QuadRat beta;
};

/// Roots of X^2 - rX - s when the discriminant is a nonzero perfect square.
struct RationalRoots {
  Rational alpha;
  Rational beta;
};

using LucasRoots = std::variant<IrrationalRoots, RationalRoots>;

/// r^2 + 4s.
std::int64_t discriminant(std::int64_t r, std::int64_t s);

/// alpha = (r + sqrt(Delta))/2, beta = (r - sqrt(Delta))/2. Throws
/// std::domain_error when Delta = 0.
LucasRoots lucasRoots(std::int64_t r, std::int64_t s);

enum class LucasKind { First, Second };

/// U(n) = (alpha^n - beta^n)/(alpha - beta) or V(n) = alpha^n + beta^n, evaluated
/// exactly. The irrational component must cancel; Delta <= 0 is rejected.
BigInt binetTerm(std::int64_t r, std::int64_t s, LucasKind kind, std::int64_t n);

/// The golden ratio (1 + sqrt 5)/2.
QuadRat goldenRatio();

/// phi^n, checked against F(n) phi + F(n-1). n >= 1.
QuadRat phiPower(std::int64_t n);

/// sum_{i=0}^{N-1} alpha^(i-k) for the dominant root alpha of X^2 - rX - s.
/// Needs Delta > 0 and not a square.
QuadRat closedFormConstant(std::int64_t r, std::int64_t s, std::int64_t N, std::int64_t k);

/// (alpha^(N/2+1) - alpha^(-N/2)) / (alpha - 1) for s = -1 and even N: the
/// multiplier in sum_{i=0}^{N} U(n+i) = c * U(n+N/2). Accepts negative Delta.
QuadRat evenWindowCoefficient(std::int64_t r, std::int64_t N);

}  // namespace lrs
