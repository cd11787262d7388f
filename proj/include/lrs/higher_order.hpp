#pragma once

// Generalized Pell (k,i) and order-k Fibonacci checks: the 2k+2 window
// theorem, window-relation scans for the conjecture that 2k+2 is the only
// window, the odd-window constraints and the order-k Fibonacci growth bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrs/identities.hpp"
#include "lrs/relation.hpp"

namespace lrs {

/// sum_{j<2k+2} P_k^i(n+j) = 4 P_k^i(n+2k) for n in [k, nMax].
VerificationReport genPellSumCheck(std::int64_t k, std::int64_t i, std::int64_t nMax);

struct FoundWindow {
  std::int64_t window = 0;
  BigInt constant;
  std::int64_t offset = 0;

  friend bool operator==(const FoundWindow&, const FoundWindow&) = default;
};

struct ConjectureScanResult {
  std::int64_t k = 0;
  std::int64_t i = 0;
  std::int64_t windowLo = 2;
  std::int64_t windowHi = 0;
  std::int64_t horizon = 0;
  std::vector<FoundWindow> foundWindows;
  /// foundWindows == {(2k+2, 4, 2k)}.
  bool matchesConjecture = false;
  std::string label;
};

/// Relation search on genPell(k, i) for windows 2..NMax. N = 1 always carries
/// the trivial relation and is left out.
ConjectureScanResult conjectureScan(std::int64_t k, std::int64_t i, std::int64_t NMax, std::int64_t horizon = 200);

struct EarlyValue {
  std::int64_t index = 0;
  BigInt value;
  BigInt expected;
  bool ok() const { return value == expected; }
};

struct OddWindowReport {
  std::int64_t k = 0;
  std::int64_t horizon = 0;
  std::vector<std::int64_t> scannedWindows;
  std::vector<FoundWindow> found;
  /// Even k: P_k^{k-1} at 2k+1, 2k+2, 2k+3.
  std::vector<EarlyValue> earlyValues;
  /// P_k^{k-1}(n) is odd exactly when (k+1) | (n+1), n in [0, horizon].
  bool mod2PatternHolds = false;
  /// Odd k: determinant of the companion matrix (expected -1).
  std::optional<BigInt> determinant;

  bool passed() const;
};

/// Even k only (std::invalid_argument otherwise).
OddWindowReport oddWindowConstraints(std::int64_t k, std::int64_t NOddMax, std::int64_t horizon = 200);
/// Odd k only.
OddWindowReport genPellOddWindow(std::int64_t k, std::int64_t NOddMax, std::int64_t horizon = 200);

/// Growth bounds for genFib(k) in internal indexing: prefix sums below f(r+2)
/// for r > 2k+1, f(n+1) < 2 f(n) for n > 2k+1, and the odd-window sandwich
/// 2f(n+2N) < sum_{i<2N+1} f(n+i) < 2f(n+2N+1) for 2N > k+1 and n+2N > 2k+1
/// (the prefix bound is applied at r = n+2N). Near the leading zeros the lower
/// bound can be an equality, e.g. k=4, N=3, n=0.
VerificationReport genFibChecks(std::int64_t k, std::int64_t rMax);

struct GenFibOddWindowReport {
  std::int64_t k = 0;
  std::int64_t horizon = 0;
  /// Odd windows longer than k+2.
  std::vector<std::int64_t> longWindows;
  std::vector<FoundWindow> longFound;
  /// Odd windows 3..k+2, outside the theorem's hypothesis.
  std::vector<FoundWindow> shortFound;

  bool passed() const { return longFound.empty(); }
};

/// Even k only.
GenFibOddWindowReport genFibOddWindowScan(std::int64_t k, std::int64_t NOddMax, std::int64_t horizon = 200);

}  // namespace lrs
