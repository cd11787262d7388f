#pragma once

// Finite-range exact verification of the sum-of-consecutive-terms identities.
// Each identity is a table entry (IdentityCase) run by one sweep engine.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lrs/numeric.hpp"
#include "lrs/quad.hpp"

namespace lrs {

/// Sweep coordinates. Each identity uses the subset named by its axes.
struct Params {
  std::int64_t n = 0;
  std::int64_t N = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t j = 0;

  std::int64_t& at(std::string_view axis);
  std::int64_t at(std::string_view axis) const;
};

struct Axis {
  std::string name;
  std::int64_t lo;
  std::int64_t hi;
};

using Value = std::variant<BigInt, QuadRat>;

std::string toString(const Value& value);

enum class Comparison { Equal, Less };

struct IdentityCase {
  std::string id;
  std::vector<Axis> axes;
  std::function<Value(const Params&)> lhs;
  std::function<Value(const Params&)> rhs;
  /// Side condition; points outside it are skipped, not failed.
  std::function<bool(const Params&)> domain = {};
  Comparison comparison = Comparison::Equal;
};

struct Counterexample {
  std::string identity;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::string lhs;
  std::string rhs;
  /// Set when evaluating a side threw instead of producing a value.
  std::string error;
};

struct VerificationReport {
  std::string identityId;
  std::string rectangle;
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Runs every case over its rectangle in order and stops at the first failure.
VerificationReport runIdentity(std::string identityId, const std::vector<IdentityCase>& cases);

/// Default rectangle for the named verifiers.
struct SweepBounds {
  std::int64_t nMax = 100;
  std::int64_t NMax = 10;
  std::int64_t kMax = 10;
  std::int64_t rMax = 6;
};

// sum_{i<4N} P(n+i) = 2P(2N) P(n+2N), with 2P(2N) also checked against
// (a^{2N} - b^{2N})/sqrt 2.
VerificationReport verifyPellSum4N(std::int64_t nMax, std::int64_t NMax);
// P(n+k) + (-1)^k P(n-k) = Q(k) P(n), n >= k.
VerificationReport verifyPellShift(std::int64_t nMax, std::int64_t kMax);
// sum_{i<4N} F(n+i) = F(2N) L(n+2N+1).
VerificationReport verifyFibSum4N(std::int64_t nMax, std::int64_t NMax);
// sum_{i<4N+2} F(n+i) = L(2N+1) F(n+2N+2), N >= 0.
VerificationReport verifyFibSum4N2(std::int64_t nMax, std::int64_t NMax);
// F(n+k) + (-1)^k F(n-k) = L(k) F(n), n >= k.
VerificationReport verifyFibShift(std::int64_t nMax, std::int64_t kMax);
// Cassini, addition, L = F(n-1)+F(n+1), prefix sums, window telescoping.
VerificationReport verifyFibAuxiliary(std::int64_t nMax, std::int64_t kMax);
// f(n)=rf(n-1)+f(n-2), f(0)=0, f(1)=1 with companion g(0)=2, g(1)=r: shift
// identity, partial sums, the 4N+2 window collapse and r | g(2N+1).
VerificationReport verifyGeneralRSum(std::int64_t r, std::int64_t nMax, std::int64_t NMax);
// Lucas 4N+2 sums, Pell-Lucas 4N sums, both alternating-sign identities and
// the s = -1 odd-length window identity for both kinds.
VerificationReport verifyLucasConverse(std::int64_t nMax, std::int64_t NMax,
                                       const std::vector<std::int64_t>& minusOneRs = {1, 3, 4});
// Partial sums, the 2k+2 window theorem, i-reduction and early powers of two.
VerificationReport verifyGenPellIdentities(std::int64_t kMax, std::int64_t nMax);

/// Ids accepted by verifyById, in registry order.
std::vector<std::string> identityIds();

/// Dispatch by id; throws std::invalid_argument for unknown ids.
VerificationReport verifyById(std::string_view id, const SweepBounds& bounds = {});

}  // namespace lrs
