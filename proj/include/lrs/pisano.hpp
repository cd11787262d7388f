#pragma once

// Periods of recurrences modulo m by state-cycle detection, plus the
// determinant argument that forces even periods.

#include <cstdint>
#include <string>

#include "lrs/recurrence.hpp"

namespace lrs {

struct PeriodResult {
  std::int64_t modulus = 0;
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;

  bool even() const noexcept { return period % 2 == 0; }
};

inline constexpr std::uint64_t kDefaultMaxStates = 10'000'000;

/// Preperiod and minimal period of u(n) mod m. m = 1 gives period 1.
/// Throws std::length_error when m^d exceeds maxStates.
PeriodResult pisano(const RecurrenceSpec& spec, std::int64_t m, std::uint64_t maxStates = kDefaultMaxStates);

struct ParityCertificate {
  PeriodResult period;
  /// det of the companion matrix reduced into [0, m).
  BigInt determinantMod;
  /// M^period == I (mod m).
  bool identityAtPeriod = false;
  /// det == -1 (mod m), m > 2 and M^period == I, so det^period = 1 forces an even period.
  bool forcedEven = false;
  std::string explanation;
};

/// Requires gcd(c_d, m) = 1 (std::domain_error otherwise).
ParityCertificate parityCertificate(const RecurrenceSpec& spec, std::int64_t m,
                                    std::uint64_t maxStates = kDefaultMaxStates);

/// True when every window sum of length N starting at n in [0, horizon] is 0 mod m.
bool windowDivisibility(const RecurrenceSpec& spec, std::int64_t N, std::int64_t m, std::int64_t horizon);

}  // namespace lrs
