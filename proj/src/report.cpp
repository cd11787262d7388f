#include "lrs/report.hpp"

#include <sstream>

namespace lrs {

namespace {

Json optionalString(const std::optional<BigInt>& v) { return v ? Json(toString(*v)) : Json(nullptr); }
Json optionalString(const std::optional<Rational>& v) { return v ? Json(toString(*v)) : Json(nullptr); }

Json quadJson(const QuadRat& q) {
  return {{"radicand", q.radicand()}, {"rational", toString(q.x())}, {"irrational", toString(q.y())}, {"text", q.str()}};
}

}  // namespace

Json toJson(const RelationVerdict& v) {
  Json j;
  j["label"] = v.label;
  j["N"] = v.window;
  j["status"] = toString(v.status);
  j["found"] = v.found();
  j["C"] = optionalString(v.constant);
  j["ratio"] = optionalString(v.ratio);
  j["k"] = v.offset ? Json(*v.offset) : Json(nullptr);
  j["otherOffsets"] = v.otherOffsets;
  j["nMin"] = v.nMin;
  j["horizon"] = v.horizon;
  j["scope"] = "verified up to horizon " + std::to_string(v.horizon);
  if (!v.found()) {
    Json witnesses = Json::array();
    for (const auto& w : v.witnesses)
      witnesses.push_back({{"k", w.offset},
                           {"referenceN", w.referenceN},
                           {"referenceRatio", toString(w.referenceRatio)},
                           {"failingN", w.failingN},
                           {"failingRatio", optionalString(w.failingRatio)}});
    j["witnesses"] = std::move(witnesses);
  }
  return j;
}

Json toJson(const FamilyRow& row) { return {{"r", row.r}, {"s", row.s}, {"verdict", toJson(row.verdict)}}; }

Json toJson(const AnalyticVerdict& v) { return {{"kind", toString(v.kind)}, {"value", quadJson(v.value)}}; }

Json toJson(const PeriodResult& r) {
  return {{"m", r.modulus}, {"preperiod", r.preperiod}, {"period", r.period}, {"parity", r.even() ? "even" : "odd"}};
}

Json toJson(const ParityCertificate& c) {
  Json j = toJson(c.period);
  j["determinantMod"] = toString(c.determinantMod);
  j["identityAtPeriod"] = c.identityAtPeriod;
  j["forcedEven"] = c.forcedEven;
  j["explanation"] = c.explanation;
  return j;
}

Json toJson(const VerificationReport& r) {
  Json j;
  j["identity"] = r.identityId;
  j["rectangle"] = r.rectangle;
  j["checked"] = r.checked;
  j["passed"] = r.passed();
  if (r.counterexample) {
    const Counterexample& c = *r.counterexample;
    Json params = Json::object();
    for (const auto& [name, value] : c.params) params[name] = value;
    j["counterexample"] = {{"case", c.identity}, {"params", params}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"error", c.error}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

Json toJson(const FoundWindow& w) { return {{"N", w.window}, {"C", toString(w.constant)}, {"k", w.offset}}; }

namespace {

Json windows(const std::vector<FoundWindow>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(toJson(w));
  return a;
}

}  // namespace

Json toJson(const ConjectureScanResult& r) {
  return {{"k", r.k},
          {"i", r.i},
          {"NRange", {r.windowLo, r.windowHi}},
          {"horizon", r.horizon},
          {"foundWindows", windows(r.foundWindows)},
          {"matchesConjecture", r.matchesConjecture},
          {"scope", r.label}};
}

Json toJson(const OddWindowReport& r) {
  Json early = Json::array();
  for (const auto& e : r.earlyValues)
    early.push_back({{"index", e.index}, {"value", toString(e.value)}, {"expected", toString(e.expected)}, {"ok", e.ok()}});
  return {{"k", r.k},
          {"horizon", r.horizon},
          {"scannedWindows", r.scannedWindows},
          {"found", windows(r.found)},
          {"earlyValues", early},
          {"mod2PatternHolds", r.mod2PatternHolds},
          {"determinant", optionalString(r.determinant)},
          {"passed", r.passed()}};
}

Json toJson(const GenFibOddWindowReport& r) {
  return {{"k", r.k},
          {"horizon", r.horizon},
          {"longWindows", r.longWindows},
          {"longFound", windows(r.longFound)},
          {"shortFound", windows(r.shortFound)},
          {"passed", r.passed()}};
}

Json toJson(const CriterionResult& r) {
  return {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}};
}

Json envelope(const std::string& subcommand, Json params, Json result) {
  Json j;
  j["tool-version"] = kToolVersion;
  j["subcommand"] = subcommand;
  j["params"] = std::move(params);
  j["result"] = std::move(result);
  return j;
}

std::string verdictCsv(const std::vector<RelationVerdict>& verdicts) {
  std::ostringstream os;
  os << "label,N,found,C,k,horizon\n";
  for (const auto& v : verdicts) {
    os << '"' << v.label << "\"," << v.window << ',' << (v.found() ? "true" : "false") << ','
       << (v.constant ? toString(*v.constant) : "") << ',' << (v.offset ? std::to_string(*v.offset) : "") << ','
       << v.horizon << '\n';
  }
  return os.str();
}

}  // namespace lrs
