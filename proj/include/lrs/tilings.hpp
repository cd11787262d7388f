#pragma once

// Tilings of a 1 x n board by coloured unit squares and (k+1)-ominoes.
// With a square colours and b omino types the count obeys
// p(n) = a p(n-1) + b p(n-k-1), p(0) = 1.

#include <cstdint>
#include <string>
#include <vector>

#include "lrs/identities.hpp"
#include "lrs/numeric.hpp"

namespace lrs {

struct TilingConfig {
  std::int64_t k = 1;  ///< omino length is k+1
  std::int64_t n = 0;  ///< board length
  std::int64_t a = 2;  ///< square colours
  std::int64_t b = 1;  ///< omino types

  /// Throws std::invalid_argument on k < 1, n < 0, a < 1 or b < 1.
  void validate() const;
};

struct Piece {
  enum class Kind { Square, Omino };
  Kind kind = Kind::Square;
  std::int64_t type = 0;  ///< colour index (< a) or omino type (< b)
  std::int64_t length = 1;

  friend bool operator==(const Piece&, const Piece&) = default;
};

using Tiling = std::vector<Piece>;

struct EnumerationResult {
  std::uint64_t count = 0;
  /// Lexicographic piece order: squares by colour, then ominoes by type.
  std::vector<Tiling> tilings;
};

struct EnumerationOptions {
  bool list = false;
  /// Refuse boards whose count exceeds this (std::length_error).
  std::uint64_t limit = 100'000'000;
};

/// Exhaustive recursion. Requires a <= 4 and b <= 4.
EnumerationResult enumerate(const TilingConfig& config, const EnumerationOptions& options = {});

/// p(n) by the weighted recurrence.
BigInt countDP(const TilingConfig& config);

/// Plain (a,b) = (2,1): "B", "W", "G<k+1>". Otherwise "S<c>" and "G<k+1>.<t>".
std::string encode(const Tiling& tiling, const TilingConfig& config);

/// p((k+1)n+r+1) = a sum_{m=0}^{n} b^(n-m) p(m(k+1)+r) + [r=k] b^(n+1) for
/// 0 <= r <= k and (k+1)n+r+1 <= nMax. For (a,b) = (2,1) also rederives the
/// generalized Pell partial-sum identity from the block sums.
VerificationReport blockSumCheck(std::int64_t k, std::int64_t nMax, std::int64_t a, std::int64_t b);

/// The block-sum right-hand side as literally printed, with +1 instead of
/// +b^(n+1) when r = k. Only agrees with p when b = 1.
BigInt blockSumLiteral(std::int64_t k, std::int64_t n, std::int64_t r, std::int64_t a, std::int64_t b);

/// The corrected right-hand side.
BigInt blockSum(std::int64_t k, std::int64_t n, std::int64_t r, std::int64_t a, std::int64_t b);

}  // namespace lrs
