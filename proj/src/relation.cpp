#include "lrs/relation.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrs {

std::string toString(RelationStatus status) {
  switch (status) {
    case RelationStatus::Found: return "found";
    case RelationStatus::NotFound: return "not-found";
    case RelationStatus::NonIntegerConstant: return "non-integer-constant";
    case RelationStatus::NonPositiveConstant: return "non-positive-constant";
    case RelationStatus::Unsupported: return "unsupported-index-range";
  }
  return "?";
}

std::string toString(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::Integer: return "integer";
    case ConstantKind::Irrational: return "irrational";
    case ConstantKind::NonIntegerRational: return "non-integer-rational";
  }
  return "?";
}

std::int64_t supportStart(const RecurrenceSpec& spec) {
  const auto init = spec.init();
  for (std::size_t i = 0; i < init.size(); ++i)
    if (init[i] != 0) return static_cast<std::int64_t>(i);
  throw std::logic_error("supportStart: zero sequence");
}

bool offsetInBand(std::int64_t window, std::int64_t offset) {
  return 2 * offset >= window && offset <= window;
}

RelationVerdict searchRelation(const RecurrenceSpec& spec, std::int64_t window, const SearchOptions& options) {
  if (window < 1) throw std::invalid_argument("searchRelation: window must be positive");
  RelationVerdict verdict;
  verdict.label = spec.label();
  verdict.window = window;
  verdict.nMin = options.nMin.value_or(supportStart(spec));
  verdict.horizon = options.horizon;
  if (verdict.nMin < 0) throw std::invalid_argument("searchRelation: nMin must be non-negative");
  if (verdict.horizon < verdict.nMin + 3) throw std::invalid_argument("searchRelation: horizon must be at least nMin + 3");
  const auto [offLo, offHi] = options.offsetRange.value_or(std::pair<std::int64_t, std::int64_t>{0, window + 2});
  if (offLo > offHi || verdict.nMin + offLo < 0) throw std::invalid_argument("searchRelation: bad offset range");

  const std::int64_t nMin = verdict.nMin;
  const std::int64_t horizon = verdict.horizon;
  const TermTable table(spec, static_cast<std::size_t>(horizon + std::max(window, offHi) + 2));
  std::vector<BigInt> sums;
  sums.reserve(static_cast<std::size_t>(horizon - nMin + 1));
  for (std::int64_t n = nMin; n <= horizon; ++n) sums.push_back(table.window(n, window));
  if (std::all_of(sums.begin(), sums.end(), [](const BigInt& s) { return s == 0; })) {
    verdict.status = RelationStatus::Unsupported;
    return verdict;
  }
  auto sumAt = [&](std::int64_t n) -> const BigInt& { return sums[static_cast<std::size_t>(n - nMin)]; };

  std::vector<std::pair<std::int64_t, Rational>> constant;
  for (std::int64_t offset = offLo; offset <= offHi; ++offset) {
    std::int64_t ref = nMin;
    while (ref <= horizon && table[ref + offset] == 0) ++ref;
    OffsetWitness w;
    w.offset = offset;
    if (ref > horizon) {
      // Every target is zero but some sum is not.
      w.failingN = nMin;
      while (sumAt(w.failingN) == 0) ++w.failingN;
      w.referenceN = w.failingN;
      verdict.witnesses.push_back(std::move(w));
      continue;
    }
    const Rational ratio(sumAt(ref), table[ref + offset]);
    const BigInt num = numerator(ratio);
    const BigInt den = denominator(ratio);
    bool holds = true;
    for (std::int64_t n = nMin; n <= horizon; ++n) {
      const BigInt& target = table[n + offset];
      if (sumAt(n) * den == num * target) continue;
      holds = false;
      w.referenceN = ref;
      w.referenceRatio = ratio;
      w.failingN = n;
      if (target != 0) w.failingRatio = Rational(sumAt(n), target);
      break;
    }
    if (holds)
      constant.emplace_back(offset, ratio);
    else
      verdict.witnesses.push_back(std::move(w));
  }

  auto pick = [&](auto predicate, RelationStatus status) {
    for (const auto& [offset, ratio] : constant) {
      if (!predicate(ratio)) continue;
      if (!verdict.offset) {
        verdict.status = status;
        verdict.offset = offset;
        verdict.ratio = ratio;
        if (status == RelationStatus::Found) verdict.constant = numerator(ratio);
      } else {
        verdict.otherOffsets.push_back(offset);
      }
    }
    return verdict.offset.has_value();
  };
  if (pick([](const Rational& q) { return isInteger(q) && q > 0; }, RelationStatus::Found)) return verdict;
  if (pick([](const Rational& q) { return !isInteger(q); }, RelationStatus::NonIntegerConstant)) return verdict;
  if (pick([](const Rational& q) { return isInteger(q) && q <= 0; }, RelationStatus::NonPositiveConstant)) return verdict;
  verdict.status = RelationStatus::NotFound;
  return verdict;
}

std::vector<RelationVerdict> classify(const RecurrenceSpec& spec, std::int64_t NMax, const SearchOptions& options) {
  if (NMax < 1) throw std::invalid_argument("classify: NMax must be positive");
  std::vector<RelationVerdict> out;
  for (std::int64_t N = 1; N <= NMax; ++N) out.push_back(searchRelation(spec, N, options));
  return out;
}

AnalyticVerdict analyticCheck(std::int64_t r, std::int64_t s, std::int64_t N, std::int64_t k) {
  QuadRat value = closedFormConstant(r, s, N, k);
  ConstantKind kind = ConstantKind::Irrational;
  if (value.isRational()) kind = isInteger(value.x()) ? ConstantKind::Integer : ConstantKind::NonIntegerRational;
  return {kind, std::move(value)};
}

std::vector<FamilyRow> scanR4(std::int64_t rMax, const SearchOptions& options) {
  std::vector<FamilyRow> rows;
  for (std::int64_t r = 1; r <= rMax; ++r) rows.push_back({r, 1, searchRelation(lucasU(r, 1), 4, options)});
  return rows;
}

std::vector<FamilyRow> lucasFamilyScan(std::int64_t rLo, std::int64_t rHi, const std::vector<std::int64_t>& sValues,
                                       std::int64_t maxWindow, const SearchOptions& options) {
  std::vector<FamilyRow> rows;
  for (std::int64_t r = rLo; r <= rHi; ++r) {
    if (r == 0) continue;
    for (std::int64_t s : sValues) {
      const RecurrenceSpec spec = lucasU(r, s);
      for (std::int64_t window = 2; window <= maxWindow; ++window)
        rows.push_back({r, s, searchRelation(spec, window, options)});
    }
  }
  return rows;
}

}  // namespace lrs
