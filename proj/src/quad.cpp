#include "lrs/quad.hpp"

#include <stdexcept>

#include "lrs/recurrence.hpp"

namespace lrs {

QuadRat::QuadRat(std::int64_t radicand, Rational x, Rational y) : x_(std::move(x)), y_(std::move(y)) {
  if (radicand == 0) throw std::invalid_argument("QuadRat: radicand must be nonzero");
  std::int64_t factor = 1;
  std::int64_t core = radicand;
  squarefreeSplit(radicand, factor, core);
  if (core == 1) throw std::invalid_argument("QuadRat: radicand " + std::to_string(radicand) + " is a perfect square");
  radicand_ = core;
  y_ *= factor;
}

void QuadRat::requireSameField(const QuadRat& other) const {
  if (radicand_ != other.radicand_)
    throw std::invalid_argument("QuadRat: mixed radicands " + std::to_string(radicand_) + " and " +
                                std::to_string(other.radicand_));
}

QuadRat& QuadRat::operator+=(const QuadRat& other) {
  requireSameField(other);
  x_ += other.x_;
  y_ += other.y_;
  return *this;
}

QuadRat& QuadRat::operator-=(const QuadRat& other) {
  requireSameField(other);
  x_ -= other.x_;
  y_ -= other.y_;
  return *this;
}

QuadRat& QuadRat::operator*=(const QuadRat& other) {
  requireSameField(other);
  Rational x = x_ * other.x_ + Rational(radicand_) * y_ * other.y_;
  Rational y = x_ * other.y_ + y_ * other.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

BigInt QuadRat::toInteger() const {
  if (!isInteger()) throw std::domain_error("QuadRat: " + str() + " is not an integer");
  return numerator(x_);
}

std::string QuadRat::str() const {
  return toString(x_) + (y_ < 0 ? " - " : " + ") + toString(Rational(abs(y_))) + "*sqrt(" +
         std::to_string(radicand_) + ")";
}

QuadRat conj(const QuadRat& v) { return {v.radicand(), v.x(), -v.y()}; }

Rational norm(const QuadRat& v) { return v.x() * v.x() - Rational(v.radicand()) * v.y() * v.y(); }

Rational trace(const QuadRat& v) { return 2 * v.x(); }

QuadRat inv(const QuadRat& v) {
  if (v.isZero()) throw std::domain_error("QuadRat: inverse of zero");
  // For non-square D the norm of a nonzero element is nonzero.
  const Rational n = norm(v);
  return conj(v) * Rational(1 / n);
}

QuadRat pow(const QuadRat& base, std::int64_t exponent) {
  QuadRat b = exponent < 0 ? inv(base) : base;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  QuadRat result = QuadRat::rational(base.radicand(), Rational(1));
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return result;
}

Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("pow: zero to a negative power");
    return pow(Rational(1 / base), -exponent);
  }
  Rational result(1);
  Rational b = base;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e != 0) b *= b;
  }
  return result;
}

std::int64_t discriminant(std::int64_t r, std::int64_t s) { return r * r + 4 * s; }

LucasRoots lucasRoots(std::int64_t r, std::int64_t s) {
  const std::int64_t delta = discriminant(r, s);
  if (delta == 0) throw std::domain_error("lucasRoots: double root (r^2 + 4s = 0)");
  const std::int64_t root = exactSqrt(delta);
  if (root >= 0) return RationalRoots{Rational(r + root, 2), Rational(r - root, 2)};
  const Rational half(1, 2);
  return IrrationalRoots{QuadRat(delta, Rational(r, 2), half), QuadRat(delta, Rational(r, 2), -half)};
}

BigInt binetTerm(std::int64_t r, std::int64_t s, LucasKind kind, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("binetTerm: n must be non-negative");
  if (discriminant(r, s) < 0) throw std::domain_error("binetTerm: negative discriminant is not supported");
  const LucasRoots roots = lucasRoots(r, s);
  if (const auto* q = std::get_if<IrrationalRoots>(&roots)) {
    const QuadRat an = pow(q->alpha, n);
    const QuadRat bn = pow(q->beta, n);
    const QuadRat value = kind == LucasKind::First ? (an - bn) * inv(q->alpha - q->beta) : an + bn;
    if (!value.isInteger()) throw std::logic_error("binetTerm: irrational part did not cancel: " + value.str());
    return value.toInteger();
  }
  const auto& q = std::get<RationalRoots>(roots);
  const Rational an = pow(q.alpha, n);
  const Rational bn = pow(q.beta, n);
  const Rational value = kind == LucasKind::First ? Rational((an - bn) / (q.alpha - q.beta)) : Rational(an + bn);
  if (!isInteger(value)) throw std::logic_error("binetTerm: non-integer value " + toString(value));
  return numerator(value);
}

QuadRat goldenRatio() { return {5, Rational(1, 2), Rational(1, 2)}; }

QuadRat phiPower(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("phiPower: n must be positive");
  const QuadRat phi = goldenRatio();
  QuadRat value = pow(phi, n);
  const auto fib = terms(fibonacci(), n - 1, 2);
  const QuadRat expected = phi * Rational(fib[1]) + Rational(fib[0]);
  if (!(value == expected)) throw std::logic_error("phiPower: phi^n != F(n) phi + F(n-1) at n=" + std::to_string(n));
  return value;
}

QuadRat closedFormConstant(std::int64_t r, std::int64_t s, std::int64_t N, std::int64_t k) {
  if (N < 1) throw std::invalid_argument("closedFormConstant: N must be positive");
  const std::int64_t delta = discriminant(r, s);
  if (delta <= 0 || exactSqrt(delta) >= 0)
    throw std::domain_error("closedFormConstant: needs a positive non-square discriminant");
  const QuadRat alpha = std::get<IrrationalRoots>(lucasRoots(r, s)).alpha;
  QuadRat sum = QuadRat::rational(alpha.radicand(), Rational(0));
  QuadRat power = pow(alpha, -k);
  for (std::int64_t i = 0; i < N; ++i) {
    sum += power;
    power *= alpha;
  }
  return sum;
}

QuadRat evenWindowCoefficient(std::int64_t r, std::int64_t N) {
  if (N < 0 || N % 2 != 0) throw std::invalid_argument("evenWindowCoefficient: N must be even and non-negative");
  const LucasRoots roots = lucasRoots(r, -1);
  const auto* q = std::get_if<IrrationalRoots>(&roots);
  if (q == nullptr) throw std::domain_error("evenWindowCoefficient: rational roots");
  const QuadRat& alpha = q->alpha;
  const QuadRat numerator = pow(alpha, N / 2 + 1) - pow(alpha, -(N / 2));
  return numerator * inv(alpha - Rational(1));
}

}  // namespace lrs
