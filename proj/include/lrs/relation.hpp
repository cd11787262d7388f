#pragma once

// Search for window relations sum_{i<N} f(n+i) = C * f(n+k) with a fixed
// integer C and fixed offset k, checked exactly at every n of a finite sweep,
// and the analytic cross-check through sum_{i<N} alpha^(i-k).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrs/numeric.hpp"
#include "lrs/quad.hpp"
#include "lrs/recurrence.hpp"

namespace lrs {

enum class RelationStatus {
  Found,               ///< constant positive integer ratio at some offset
  NotFound,            ///< no offset gives a constant ratio
  NonIntegerConstant,  ///< constant ratio that is not an integer
  NonPositiveConstant, ///< constant integer ratio <= 0
  Unsupported,         ///< every window sum in range is zero
};

std::string toString(RelationStatus status);

/// Why an offset was rejected: the first n where the ratio departs from the
/// ratio at `referenceN`.
struct OffsetWitness {
  std::int64_t offset = 0;
  std::int64_t referenceN = 0;
  Rational referenceRatio;
  std::int64_t failingN = 0;
  /// Absent when the target term at failingN is zero (and the sum is not).
  std::optional<Rational> failingRatio;
};

struct RelationVerdict {
  std::string label;
  std::int64_t window = 0;
  RelationStatus status = RelationStatus::NotFound;
  /// Found: the integer C.
  std::optional<BigInt> constant;
  /// Any constant-ratio status: the exact ratio.
  std::optional<Rational> ratio;
  std::optional<std::int64_t> offset;
  /// Further offsets with the same kind of constant ratio (degenerate sequences only).
  std::vector<std::int64_t> otherOffsets;
  std::int64_t nMin = 0;
  std::int64_t horizon = 0;
  std::vector<OffsetWitness> witnesses;

  bool found() const noexcept { return status == RelationStatus::Found; }
};

struct SearchOptions {
  /// Defaults to the first index with a nonzero term.
  std::optional<std::int64_t> nMin;
  std::int64_t horizon = 200;
  /// Inclusive; defaults to [0, N+2].
  std::optional<std::pair<std::int64_t, std::int64_t>> offsetRange;
};

/// First index with a nonzero term (the support start).
std::int64_t supportStart(const RecurrenceSpec& spec);

RelationVerdict searchRelation(const RecurrenceSpec& spec, std::int64_t window, const SearchOptions& options = {});

/// searchRelation for every window 1..NMax.
std::vector<RelationVerdict> classify(const RecurrenceSpec& spec, std::int64_t NMax, const SearchOptions& options = {});

/// True when offset k lies in [ceil(N/2), N].
bool offsetInBand(std::int64_t window, std::int64_t offset);

enum class ConstantKind { Integer, Irrational, NonIntegerRational };

std::string toString(ConstantKind kind);

struct AnalyticVerdict {
  ConstantKind kind;
  QuadRat value;
};

/// Classifies sum_{i<N} alpha^(i-k); Delta must be positive and non-square.
AnalyticVerdict analyticCheck(std::int64_t r, std::int64_t s, std::int64_t N, std::int64_t k);

struct FamilyRow {
  std::int64_t r = 0;
  std::int64_t s = 0;
  RelationVerdict verdict;
};

/// Window-4 search over f(n) = r f(n-1) + f(n-2), f(0)=0, f(1)=1, r = 1..rMax.
std::vector<FamilyRow> scanR4(std::int64_t rMax, const SearchOptions& options = {});

/// First-kind Lucas sequences U(r,s) for r in [rLo, rHi] \ {0}, s in sValues,
/// windows 2..maxWindow.
std::vector<FamilyRow> lucasFamilyScan(std::int64_t rLo, std::int64_t rHi, const std::vector<std::int64_t>& sValues,
                                       std::int64_t maxWindow, const SearchOptions& options = {});

}  // namespace lrs
