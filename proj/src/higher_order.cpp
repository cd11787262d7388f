#include "lrs/higher_order.hpp"

#include <memory>
#include <stdexcept>

#include "lrs/linalg.hpp"
#include "lrs/recurrence.hpp"

namespace lrs {

namespace {

using Table = std::shared_ptr<const TermTable>;

void requireGenPell(std::int64_t k, std::int64_t i, const char* who) {
  if (k < 1 || i < 0 || i >= k)
    throw std::invalid_argument(std::string(who) + ": need k >= 1 and 0 <= i <= k-1");
}

std::vector<FoundWindow> scanWindows(const RecurrenceSpec& spec, const std::vector<std::int64_t>& windows,
                                     std::int64_t horizon) {
  SearchOptions options;
  options.horizon = horizon;
  std::vector<FoundWindow> found;
  for (std::int64_t N : windows) {
    const RelationVerdict v = searchRelation(spec, N, options);
    if (v.found()) found.push_back({N, *v.constant, *v.offset});
  }
  return found;
}

std::vector<std::int64_t> oddRange(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t N = lo | 1; N <= hi; N += 2) out.push_back(N);
  return out;
}

OddWindowReport oddWindowCommon(std::int64_t k, std::int64_t NOddMax, std::int64_t horizon) {
  OddWindowReport report;
  report.k = k;
  report.horizon = horizon;
  const RecurrenceSpec spec = genPell(k, k - 1);
  report.scannedWindows = oddRange(3, NOddMax);
  report.found = scanWindows(spec, report.scannedWindows, horizon);
  const TermTable t(spec, static_cast<std::size_t>(horizon + 1));
  report.mod2PatternHolds = true;
  for (std::int64_t n = 0; n <= horizon; ++n)
    if ((t[n] % 2 == 1) != ((n + 1) % (k + 1) == 0)) report.mod2PatternHolds = false;
  return report;
}

}  // namespace

VerificationReport genPellSumCheck(std::int64_t k, std::int64_t i, std::int64_t nMax) {
  requireGenPell(k, i, "genPellSumCheck");
  Table p = std::make_shared<const TermTable>(genPell(k, i), static_cast<std::size_t>(nMax + 2 * k + 3));
  const std::string tag = "[k=" + std::to_string(k) + ",i=" + std::to_string(i) + "]";
  return runIdentity("genpell-window" + tag,
                     {{"genpell-window-2k+2" + tag,
                       {{"n", k, nMax}},
                       [p, k](const Params& q) -> Value { return p->window(q.n, 2 * k + 2); },
                       [p, k](const Params& q) -> Value { return BigInt(4 * (*p)[q.n + 2 * k]); }}});
}

ConjectureScanResult conjectureScan(std::int64_t k, std::int64_t i, std::int64_t NMax, std::int64_t horizon) {
  if (k < 2) throw std::invalid_argument("conjectureScan: k must be at least 2");
  requireGenPell(k, i, "conjectureScan");
  ConjectureScanResult result;
  result.k = k;
  result.i = i;
  result.windowHi = NMax;
  result.horizon = horizon;
  std::vector<std::int64_t> windows;
  for (std::int64_t N = 2; N <= NMax; ++N) windows.push_back(N);
  result.foundWindows = scanWindows(genPell(k, i), windows, horizon);
  result.matchesConjecture =
      result.foundWindows == std::vector<FoundWindow>{{2 * k + 2, BigInt(4), 2 * k}};
  result.label = "verified up to horizon " + std::to_string(horizon);
  return result;
}

bool OddWindowReport::passed() const {
  if (!found.empty() || !mod2PatternHolds) return false;
  for (const auto& e : earlyValues)
    if (!e.ok()) return false;
  return !determinant || *determinant == -1;
}

OddWindowReport oddWindowConstraints(std::int64_t k, std::int64_t NOddMax, std::int64_t horizon) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("oddWindowConstraints: k must be even and >= 2");
  OddWindowReport report = oddWindowCommon(k, NOddMax, horizon);
  const RecurrenceSpec spec = genPell(k, k - 1);
  const BigInt twoK1 = BigInt(1) << static_cast<unsigned>(k + 1);
  const BigInt offsets[] = {1, 4, 12};
  for (std::int64_t j = 0; j < 3; ++j)
    report.earlyValues.push_back(
        {2 * k + 1 + j, term(spec, 2 * k + 1 + j), BigInt((twoK1 << static_cast<unsigned>(j)) + offsets[j])});
  return report;
}

OddWindowReport genPellOddWindow(std::int64_t k, std::int64_t NOddMax, std::int64_t horizon) {
  if (k < 1 || k % 2 == 0) throw std::invalid_argument("genPellOddWindow: k must be odd and >= 1");
  OddWindowReport report = oddWindowCommon(k, NOddMax, horizon);
  report.determinant = bareissDeterminant(companionMatrix<BigInt>(genPell(k, k - 1)));
  return report;
}

VerificationReport genFibChecks(std::int64_t k, std::int64_t rMax) {
  if (k < 2) throw std::invalid_argument("genFibChecks: k must be at least 2");
  constexpr std::int64_t kSandwichMax = 10;
  Table f = std::make_shared<const TermTable>(genFib(k), static_cast<std::size_t>(rMax + 2 * kSandwichMax + 4));
  const std::string tag = "[k=" + std::to_string(k) + "]";
  const std::int64_t edge = 2 * k + 1;
  return runIdentity(
      "genfib-growth" + tag,
      {{"genfib-prefix-bound" + tag,
        {{"r", 0, rMax}},
        [f](const Params& p) -> Value { return f->window(0, p.r + 1); },
        [f](const Params& p) -> Value { return (*f)[p.r + 2]; },
        [edge](const Params& p) { return p.r > edge; },
        Comparison::Less},
       {"genfib-ratio-bound" + tag,
        {{"n", 0, rMax}},
        [f](const Params& p) -> Value { return (*f)[p.n + 1]; },
        [f](const Params& p) -> Value { return BigInt(2 * (*f)[p.n]); },
        [edge](const Params& p) { return p.n > edge; },
        Comparison::Less},
       {"genfib-sandwich-lower" + tag,
        {{"N", 1, kSandwichMax}, {"n", 0, rMax}},
        [f](const Params& p) -> Value { return BigInt(2 * (*f)[p.n + 2 * p.N]); },
        [f](const Params& p) -> Value { return f->window(p.n, 2 * p.N + 1); },
        [k, edge](const Params& p) { return 2 * p.N > k + 1 && p.n + 2 * p.N > edge; },
        Comparison::Less},
       {"genfib-sandwich-upper" + tag,
        {{"N", 1, kSandwichMax}, {"n", 0, rMax}},
        [f](const Params& p) -> Value { return f->window(p.n, 2 * p.N + 1); },
        [f](const Params& p) -> Value { return BigInt(2 * (*f)[p.n + 2 * p.N + 1]); },
        [k, edge](const Params& p) { return 2 * p.N > k + 1 && p.n + 2 * p.N > edge; },
        Comparison::Less}});
}

GenFibOddWindowReport genFibOddWindowScan(std::int64_t k, std::int64_t NOddMax, std::int64_t horizon) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("genFibOddWindowScan: k must be even and >= 2");
  GenFibOddWindowReport report;
  report.k = k;
  report.horizon = horizon;
  const RecurrenceSpec spec = genFib(k);
  report.longWindows = oddRange(k + 3, NOddMax);
  report.longFound = scanWindows(spec, report.longWindows, horizon);
  report.shortFound = scanWindows(spec, oddRange(3, k + 2), horizon);
  return report;
}

}  // namespace lrs
