#include "lrs/numeric.hpp"

#include <cmath>
#include <stdexcept>

namespace lrs {

std::string toString(const BigInt& value) { return value.str(); }

std::string toString(const Rational& value) {
  if (isInteger(value)) return toString(BigInt(numerator(value)));
  return BigInt(numerator(value)).str() + "/" + BigInt(denominator(value)).str();
}

BigInt floorMod(const BigInt& value, const BigInt& modulus) {
  BigInt r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

bool isInteger(const Rational& value) { return denominator(value) == 1; }

std::int64_t exactSqrt(std::int64_t value) {
  if (value < 0) return -1;
  auto root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(value)));
  while (root > 0 && root * root > value) --root;
  while ((root + 1) * (root + 1) <= value) ++root;
  return root * root == value ? root : -1;
}

void squarefreeSplit(std::int64_t value, std::int64_t& factor, std::int64_t& core) {
  if (value == 0) throw std::invalid_argument("squarefreeSplit: zero has no squarefree part");
  const std::int64_t sign = value < 0 ? -1 : 1;
  std::int64_t rest = value < 0 ? -value : value;
  factor = 1;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      factor *= p;
    }
  }
  core = sign * rest;
}

std::size_t decimalDigits(const BigInt& value) {
  if (value == 0) return 1;
  return BigInt(abs(value)).str().size();
}

}  // namespace lrs
