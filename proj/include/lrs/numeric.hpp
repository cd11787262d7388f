#pragma once

// Exact scalar types shared by every module, plus the dense Eigen aliases
// used for companion matrices and state vectors.

#include <cstdint>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace lrs {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

std::string toString(const BigInt& value);
std::string toString(const Rational& value);

/// Residue of `value` in [0, modulus).
BigInt floorMod(const BigInt& value, const BigInt& modulus);

bool isInteger(const Rational& value);

/// Exact integer square root when `value` is a perfect square, -1 otherwise.
std::int64_t exactSqrt(std::int64_t value);

/// Writes value = factor^2 * core with core squarefree (sign kept on core).
void squarefreeSplit(std::int64_t value, std::int64_t& factor, std::int64_t& core);

/// Number of decimal digits of |value| (1 for zero).
std::size_t decimalDigits(const BigInt& value);

}  // namespace lrs
