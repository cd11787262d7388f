#include "lrs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lrs/acceptance.hpp"
#include "lrs/higher_order.hpp"
#include "lrs/identities.hpp"
#include "lrs/pisano.hpp"
#include "lrs/recurrence.hpp"
#include "lrs/relation.hpp"
#include "lrs/report.hpp"
#include "lrs/tilings.hpp"

namespace lrs {

namespace {

constexpr std::size_t kDigitGuard = 1'000'000;

// Raised for input problems detected by the CLI itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecArgs {
  std::string seq;
  std::string coeffs;
  std::string init;
};

void addSpecOptions(CLI::App* sub, SpecArgs& a) {
  sub->add_option("--seq", a.seq, "builtin sequence, e.g. pell, fibonacci, lucasU(3,-1), genPell(2,1)");
  sub->add_option("--coeffs", a.coeffs, "comma-separated recurrence coefficients c_1,...,c_d");
  sub->add_option("--init", a.init, "comma-separated initial terms u(0),...,u(d-1)");
}

std::vector<std::string> splitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw UsageError("empty entry in list '" + text + "'");
    out.push_back(item);
  }
  return out;
}

RecurrenceSpec resolveSpec(const SpecArgs& a) {
  if (!a.coeffs.empty() || !a.init.empty()) {
    if (!a.seq.empty()) throw UsageError("--seq cannot be combined with --coeffs/--init");
    if (a.coeffs.empty() || a.init.empty()) throw UsageError("--coeffs and --init must be given together");
    std::vector<std::int64_t> coeffs;
    for (const auto& c : splitCommas(a.coeffs)) {
      std::size_t used = 0;
      coeffs.push_back(std::stoll(c, &used));
      if (used != c.size()) throw UsageError("bad coefficient '" + c + "'");
    }
    std::vector<BigInt> init;
    for (const auto& v : splitCommas(a.init)) {
      try {
        init.emplace_back(v);
      } catch (const std::exception&) {
        throw UsageError("bad initial value '" + v + "'");
      }
    }
    return RecurrenceSpec(std::move(coeffs), std::move(init), "custom(" + a.coeffs + ";" + a.init + ")");
  }
  if (a.seq.empty()) throw UsageError("a sequence is required: --seq or --coeffs/--init");
  return parseSequence(a.seq);
}

Json specParams(const SpecArgs& a) {
  if (!a.seq.empty()) return {{"seq", a.seq}};
  return {{"coeffs", a.coeffs}, {"init", a.init}};
}

struct Common {
  std::string format;
  std::string output;
};

void addCommon(CLI::App* sub, Common& c, const std::string& defaultFormat, std::vector<std::string> formats) {
  c.format = defaultFormat;
  sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(std::move(formats)));
  sub->add_option("--output,-o", c.output, "write the report to this file instead of standard output");
}

std::vector<std::string> jsonTextCsv() { return {"json", "text", "csv"}; }

// Each handler writes its report into `buf` and returns an exit code.
using Handler = std::function<int(std::ostream& buf)>;

int cmdGen(const SpecArgs& sa, const Common& c, std::int64_t from, std::int64_t count, bool force,
           const std::string& method, std::ostream& buf) {
  const RecurrenceSpec spec = resolveSpec(sa);
  if (count < 0) throw UsageError("--count must be non-negative");
  std::vector<BigInt> values;
  if (method == "matrix") {
    if (from < 0) throw UsageError("--method matrix needs --from >= 0");
    for (std::int64_t i = 0; i < count; ++i) values.push_back(termByMatrix(spec, static_cast<std::uint64_t>(from + i)));
  } else {
    values = terms(spec, from, static_cast<std::size_t>(count));
  }
  std::size_t digits = 0;
  for (const auto& v : values) digits += decimalDigits(v);
  if (digits > kDigitGuard && !force)
    throw UsageError("output has " + std::to_string(digits) + " digits; pass --force to print more than 10^6");
  if (c.format == "text") {
    for (std::size_t i = 0; i < values.size(); ++i) buf << (i ? " " : "") << toString(values[i]);
    buf << '\n';
  } else if (c.format == "csv") {
    buf << "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) buf << from + static_cast<std::int64_t>(i) << ',' << toString(values[i]) << '\n';
  } else {
    Json list = Json::array();
    for (const auto& v : values) list.push_back(toString(v));
    Json params = specParams(sa);
    params["from"] = from;
    params["count"] = count;
    params["method"] = method;
    buf << envelope("gen", params, {{"label", spec.label()}, {"terms", list}}).dump(2) << '\n';
  }
  return kExitOk;
}

int cmdSum(const SpecArgs& sa, const Common& c, std::int64_t n, std::int64_t window, std::ostream& buf) {
  const RecurrenceSpec spec = resolveSpec(sa);
  if (window < 1) throw UsageError("--window must be positive");
  const BigInt s = windowSum(spec, n, window);
  if (c.format == "text") {
    buf << toString(s) << '\n';
  } else {
    Json params = specParams(sa);
    params["n"] = n;
    params["window"] = window;
    buf << envelope("sum", params, {{"label", spec.label()}, {"sum", toString(s)}}).dump(2) << '\n';
  }
  return kExitOk;
}

std::string verdictLine(const RelationVerdict& v) {
  std::ostringstream os;
  os << v.label << " N=" << v.window << ": " << toString(v.status);
  if (v.constant) os << " C=" << toString(*v.constant);
  else if (v.ratio) os << " ratio=" << toString(*v.ratio);
  if (v.offset) os << " k=" << *v.offset;
  os << " (verified up to horizon " << v.horizon << ")";
  return os.str();
}

SearchOptions searchOptions(std::int64_t horizon, std::optional<std::int64_t> nMin, std::optional<std::int64_t> kLo,
                            std::optional<std::int64_t> kHi, std::int64_t window) {
  SearchOptions o;
  o.horizon = horizon;
  o.nMin = nMin;
  if (kLo || kHi) o.offsetRange = std::pair{kLo.value_or(0), kHi.value_or(window + 2)};
  return o;
}

int cmdSearch(const SpecArgs& sa, const Common& c, std::int64_t window, std::int64_t horizon,
              std::optional<std::int64_t> nMin, std::optional<std::int64_t> kLo, std::optional<std::int64_t> kHi,
              std::ostream& buf) {
  const RecurrenceSpec spec = resolveSpec(sa);
  const RelationVerdict v = searchRelation(spec, window, searchOptions(horizon, nMin, kLo, kHi, window));
  if (c.format == "text") {
    buf << verdictLine(v) << '\n';
  } else if (c.format == "csv") {
    buf << verdictCsv({v});
  } else {
    Json params = specParams(sa);
    params["window"] = window;
    params["horizon"] = horizon;
    params["nmin"] = nMin ? Json(*nMin) : Json(nullptr);
    buf << envelope("search", params, toJson(v)).dump(2) << '\n';
  }
  return kExitOk;
}

int cmdClassify(const SpecArgs& sa, const Common& c, std::int64_t NMax, std::int64_t horizon,
                std::optional<std::int64_t> nMin, std::ostream& buf) {
  const RecurrenceSpec spec = resolveSpec(sa);
  SearchOptions o;
  o.horizon = horizon;
  o.nMin = nMin;
  const auto verdicts = classify(spec, NMax, o);
  if (c.format == "csv") {
    buf << verdictCsv(verdicts);
  } else if (c.format == "text") {
    for (const auto& v : verdicts) buf << verdictLine(v) << '\n';
  } else {
    Json list = Json::array();
    for (const auto& v : verdicts) list.push_back(toJson(v));
    Json params = specParams(sa);
    params["Nmax"] = NMax;
    params["horizon"] = horizon;
    buf << envelope("classify", params, list).dump(2) << '\n';
  }
  return kExitOk;
}

int cmdPisano(const SpecArgs& sa, const Common& c, std::optional<std::int64_t> m, std::optional<std::int64_t> mLo,
              std::optional<std::int64_t> mHi, bool certificate, std::ostream& buf) {
  const RecurrenceSpec spec = resolveSpec(sa);
  if (m && (mLo || mHi)) throw UsageError("use either --m or --mmin/--mmax");
  if (!m && !(mLo && mHi)) throw UsageError("--m or both --mmin and --mmax are required");
  const std::int64_t lo = m ? *m : *mLo;
  const std::int64_t hi = m ? *m : *mHi;
  if (lo < 1 || hi < lo) throw UsageError("moduli must satisfy 1 <= mmin <= mmax");
  Json rows = Json::array();
  for (std::int64_t q = lo; q <= hi; ++q)
    rows.push_back(certificate ? toJson(parityCertificate(spec, q)) : toJson(pisano(spec, q)));
  if (c.format == "jsonl") {
    for (const auto& row : rows) buf << row.dump() << '\n';
  } else if (c.format == "csv") {
    buf << "m,preperiod,period,parity\n";
    for (const auto& row : rows)
      buf << row["m"] << ',' << row["preperiod"] << ',' << row["period"] << ',' << row["parity"].get<std::string>() << '\n';
  } else if (c.format == "text") {
    for (const auto& row : rows) {
      buf << "m=" << row["m"] << " preperiod=" << row["preperiod"] << " period=" << row["period"] << " ("
          << row["parity"].get<std::string>() << ")";
      if (certificate) buf << ": " << row["explanation"].get<std::string>();
      buf << '\n';
    }
  } else {
    Json params = specParams(sa);
    params["mmin"] = lo;
    params["mmax"] = hi;
    params["certificate"] = certificate;
    buf << envelope("pisano", params, rows).dump(2) << '\n';
  }
  return kExitOk;
}

std::string reportLine(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS " : "FAIL ") << r.identityId << " (" << r.checked << " points)";
  if (r.counterexample) {
    const auto& cx = *r.counterexample;
    os << "\n  counterexample in " << cx.identity << ":";
    for (const auto& [name, value] : cx.params) os << ' ' << name << '=' << value;
    if (!cx.error.empty()) os << "\n  error: " << cx.error;
    else os << "\n  lhs = " << cx.lhs << "\n  rhs = " << cx.rhs;
  }
  return os.str();
}

int cmdVerify(const Common& c, const std::string& id, const SweepBounds& bounds, std::ostream& buf) {
  std::vector<std::string> ids = id == "all" ? identityIds() : std::vector<std::string>{id};
  const auto known = identityIds();
  for (const auto& i : ids)
    if (std::find(known.begin(), known.end(), i) == known.end()) throw UsageError("unknown identity id '" + i + "'");
  std::vector<VerificationReport> reports;
  bool ok = true;
  for (const auto& i : ids) {
    reports.push_back(verifyById(i, bounds));
    ok = ok && reports.back().passed();
  }
  if (c.format == "text") {
    for (const auto& r : reports) buf << reportLine(r) << '\n';
  } else {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(toJson(r));
    Json params = {{"id", id}, {"nmax", bounds.nMax}, {"Nmax", bounds.NMax}, {"kmax", bounds.kMax}, {"rmax", bounds.rMax}};
    buf << envelope("verify", params, list).dump(2) << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmdTilings(const Common& c, const std::string& mode, const TilingConfig& cfg, bool list, std::ostream& buf) {
  Json params = {{"mode", mode}, {"k", cfg.k}, {"n", cfg.n}, {"a", cfg.a}, {"b", cfg.b}};
  if (mode == "blocksum") {
    const auto r = blockSumCheck(cfg.k, cfg.n, cfg.a, cfg.b);
    if (c.format == "text") buf << reportLine(r) << '\n';
    else buf << envelope("tilings", params, toJson(r)).dump(2) << '\n';
    return r.passed() ? kExitOk : kExitFailed;
  }
  if (mode == "count") {
    const BigInt n = countDP(cfg);
    if (c.format == "text") buf << toString(n) << '\n';
    else buf << envelope("tilings", params, {{"count", toString(n)}}).dump(2) << '\n';
    return kExitOk;
  }
  EnumerationOptions options;
  options.list = list;
  if (list) options.limit = 1'000'000;
  const auto e = enumerate(cfg, options);
  const BigInt dp = countDP(cfg);
  const bool agree = BigInt(e.count) == dp;
  if (c.format == "text") {
    for (const auto& t : e.tilings) buf << encode(t, cfg) << '\n';
    buf << "count " << e.count << " (dp " << toString(dp) << (agree ? ", agree" : ", MISMATCH") << ")\n";
  } else {
    params["list"] = list;
    Json result = {{"count", e.count}, {"countDP", toString(dp)}, {"agree", agree}};
    if (list) {
      Json tilings = Json::array();
      for (const auto& t : e.tilings) tilings.push_back(encode(t, cfg));
      result["tilings"] = tilings;
    }
    buf << envelope("tilings", params, result).dump(2) << '\n';
  }
  return agree ? kExitOk : kExitFailed;
}

int cmdConjecture(const Common& c, const std::string& mode, std::int64_t kLo, std::int64_t kHi,
                  std::optional<std::int64_t> NMax, std::optional<std::int64_t> i, std::int64_t horizon,
                  std::ostream& buf) {
  if (kLo > kHi) throw UsageError("--kmin must not exceed --kmax");
  Json rows = Json::array();
  bool ok = true;
  std::ostringstream text;
  if (mode == "scan") {
    std::vector<ConjectureScanResult> scans;
    std::int64_t widest = 0;
    for (std::int64_t k = kLo; k <= kHi; ++k) {
      scans.push_back(conjectureScan(k, i.value_or(k - 1), NMax.value_or(2 * k + 8), horizon));
      widest = std::max(widest, scans.back().windowHi);
      ok = ok && scans.back().matchesConjecture;
      rows.push_back(toJson(scans.back()));
    }
    text << "k\\N";
    for (std::int64_t N = 2; N <= widest; ++N) text << ' ' << (N < 10 ? " " : "") << N;
    text << '\n';
    for (const auto& s : scans) {
      text << (s.k < 10 ? "  " : " ") << s.k;
      for (std::int64_t N = 2; N <= widest; ++N) {
        const bool hit = std::any_of(s.foundWindows.begin(), s.foundWindows.end(),
                                     [N](const FoundWindow& w) { return w.window == N; });
        text << "  " << (N > s.windowHi ? ' ' : hit ? '#' : '.');
      }
      text << '\n';
    }
    text << "# = window relation found (verified up to horizon " << horizon << ")\n";
  } else {
    const std::int64_t oddMax = NMax.value_or(15);
    for (std::int64_t k = kLo; k <= kHi; ++k) {
      if (mode == "odd") {
        const auto r = k % 2 == 0 ? oddWindowConstraints(k, oddMax, horizon) : genPellOddWindow(k, oddMax, horizon);
        ok = ok && r.passed();
        rows.push_back(toJson(r));
        text << "genPell k=" << k << ": " << r.found.size() << " odd windows found in [3," << oddMax << "]"
             << (r.passed() ? ", PASS" : ", FAIL") << '\n';
      } else {
        if (k % 2 != 0) continue;
        const auto r = genFibOddWindowScan(k, oddMax, horizon);
        ok = ok && r.passed();
        rows.push_back(toJson(r));
        text << "genFib k=" << k << ": " << r.longFound.size() << " odd windows in (" << k + 2 << "," << oddMax
             << "], " << r.shortFound.size() << " short" << (r.passed() ? ", PASS" : ", FAIL") << '\n';
      }
    }
  }
  if (c.format == "text") {
    buf << text.str();
  } else {
    Json params = {{"mode", mode}, {"kmin", kLo}, {"kmax", kHi}, {"horizon", horizon}};
    params["Nmax"] = NMax ? Json(*NMax) : Json(nullptr);
    params["i"] = i ? Json(*i) : Json(nullptr);
    buf << envelope("conjecture", params, rows).dump(2) << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

int cmdAccept(const Common& c, std::optional<int> only, std::ostream& buf) {
  std::vector<CriterionResult> results = only ? std::vector<CriterionResult>{runCriterion(*only)} : runAcceptance();
  const bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  if (c.format == "text") {
    for (const auto& r : results)
      buf << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << ' ' << r.name << ": " << r.detail << '\n';
  } else {
    Json list = Json::array();
    for (const auto& r : results) list.push_back(toJson(r));
    buf << envelope("accept", {{"criterion", only ? Json(*only) : Json("all")}}, list).dump(2) << '\n';
  }
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact identities, window relations and periods of linear recurrences", "lrs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Handler handler;
  SpecArgs spec;
  std::map<std::string, Common> commons;  // per subcommand, so each keeps its default format
  Common* active = nullptr;

  // gen
  std::int64_t from = 0, count = 10;
  bool force = false;
  std::string method = "iterate";
  auto* gen = app.add_subcommand("gen", "print consecutive terms");
  addSpecOptions(gen, spec);
  gen->add_option("--from", from, "first index");
  gen->add_option("--count", count, "number of terms");
  gen->add_flag("--force", force, "allow output above 10^6 digits");
  gen->add_option("--method", method, "iterate or matrix")->check(CLI::IsMember({"iterate", "matrix"}));
  addCommon(gen, commons["gen"], "text", jsonTextCsv());
  gen->callback([&] {
    active = &commons["gen"];
    handler = [&](std::ostream& b) { return cmdGen(spec, *active, from, count, force, method, b); };
  });

  // sum
  std::int64_t sumN = 0, window = 0;
  auto* sum = app.add_subcommand("sum", "window sum u(n) + ... + u(n+window-1)");
  addSpecOptions(sum, spec);
  sum->add_option("--n", sumN, "first index")->required();
  sum->add_option("--window", window, "window length")->required();
  addCommon(sum, commons["sum"], "text", {"json", "text"});
  sum->callback([&] {
    active = &commons["sum"];
    handler = [&](std::ostream& b) { return cmdSum(spec, *active, sumN, window, b); };
  });

  // search
  std::int64_t horizon = 200;
  std::optional<std::int64_t> nMin, kLo, kHi;
  auto* search = app.add_subcommand("search", "look for sum of N terms = C * u(n+k)");
  addSpecOptions(search, spec);
  search->add_option("--window,-N", window, "window length N")->required();
  search->add_option("--horizon", horizon, "last n checked");
  search->add_option("--nmin", nMin, "first n checked (default: first nonzero term)");
  search->add_option("--kmin", kLo, "smallest offset tried (default 0)");
  search->add_option("--kmax", kHi, "largest offset tried (default N+2)");
  addCommon(search, commons["search"], "json", jsonTextCsv());
  search->callback([&] {
    active = &commons["search"];
    handler = [&](std::ostream& b) { return cmdSearch(spec, *active, window, horizon, nMin, kLo, kHi, b); };
  });

  // classify
  std::int64_t NMax = 16;
  auto* cls = app.add_subcommand("classify", "search every window 1..Nmax");
  addSpecOptions(cls, spec);
  cls->add_option("--Nmax", NMax, "largest window");
  cls->add_option("--horizon", horizon, "last n checked");
  cls->add_option("--nmin", nMin, "first n checked");
  addCommon(cls, commons["classify"], "json", jsonTextCsv());
  cls->callback([&] {
    active = &commons["classify"];
    handler = [&](std::ostream& b) { return cmdClassify(spec, *active, NMax, horizon, nMin, b); };
  });

  // pisano
  std::optional<std::int64_t> m, mLo, mHi;
  bool certificate = false;
  auto* pis = app.add_subcommand("pisano", "period modulo m, or a sweep over moduli");
  addSpecOptions(pis, spec);
  pis->add_option("--m", m, "modulus");
  pis->add_option("--mmin", mLo, "first modulus of a sweep");
  pis->add_option("--mmax", mHi, "last modulus of a sweep");
  pis->add_flag("--certificate", certificate, "add the determinant parity certificate");
  addCommon(pis, commons["pisano"], "jsonl", {"json", "jsonl", "csv", "text"});
  pis->callback([&] {
    active = &commons["pisano"];
    handler = [&](std::ostream& b) { return cmdPisano(spec, *active, m, mLo, mHi, certificate, b); };
  });

  // verify
  std::string id = "all";
  SweepBounds bounds;
  auto* ver = app.add_subcommand("verify", "exact identity sweeps");
  ver->add_option("--id", id, "identity id or 'all'");
  ver->add_option("--nmax", bounds.nMax, "largest n");
  ver->add_option("--Nmax", bounds.NMax, "largest N");
  ver->add_option("--kmax", bounds.kMax, "largest k");
  ver->add_option("--rmax", bounds.rMax, "largest r");
  addCommon(ver, commons["verify"], "text", {"json", "text"});
  ver->callback([&] {
    active = &commons["verify"];
    handler = [&](std::ostream& b) { return cmdVerify(*active, id, bounds, b); };
  });

  // tilings
  std::string tilingMode = "count";
  TilingConfig cfg;
  bool listTilings = false;
  auto* til = app.add_subcommand("tilings", "tilings of a 1 x n board by squares and (k+1)-ominoes");
  til->add_option("--mode", tilingMode, "count, enumerate or blocksum")
      ->check(CLI::IsMember({"count", "enumerate", "blocksum"}));
  til->add_option("--k", cfg.k, "omino length minus one");
  til->add_option("--n", cfg.n, "board length (blocksum: largest index checked)");
  til->add_option("--a", cfg.a, "square colours");
  til->add_option("--b", cfg.b, "omino types");
  til->add_flag("--list", listTilings, "list every tiling (enumerate)");
  addCommon(til, commons["tilings"], "text", {"json", "text"});
  til->callback([&] {
    active = &commons["tilings"];
    handler = [&](std::ostream& b) { return cmdTilings(*active, tilingMode, cfg, listTilings, b); };
  });

  // conjecture
  std::string conjMode = "scan";
  std::int64_t ckLo = 2, ckHi = 5;
  std::optional<std::int64_t> cNMax, ci;
  std::int64_t cHorizon = 200;
  auto* conj = app.add_subcommand("conjecture", "window scans for generalized Pell and order-k Fibonacci");
  conj->add_option("--mode", conjMode, "scan, odd or genfib-odd")->check(CLI::IsMember({"scan", "odd", "genfib-odd"}));
  conj->add_option("--kmin", ckLo, "first k");
  conj->add_option("--kmax", ckHi, "last k");
  conj->add_option("--Nmax", cNMax, "largest window (scan default 2k+8, odd modes default 15)");
  conj->add_option("--i", ci, "initial-value parameter (default k-1)");
  conj->add_option("--horizon", cHorizon, "last n checked");
  addCommon(conj, commons["conjecture"], "text", {"json", "text"});
  conj->callback([&] {
    active = &commons["conjecture"];
    handler = [&](std::ostream& b) { return cmdConjecture(*active, conjMode, ckLo, ckHi, cNMax, ci, cHorizon, b); };
  });

  // accept
  std::optional<int> criterion;
  auto* acc = app.add_subcommand("accept", "run the acceptance criteria");
  acc->add_option("--criterion", criterion, "run a single criterion (1-13)")->check(CLI::Range(1, 13));
  addCommon(acc, commons["accept"], "text", {"json", "text"});
  acc->callback([&] {
    active = &commons["accept"];
    handler = [&](std::ostream& b) { return cmdAccept(*active, criterion, b); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buf;
  int code = kExitOk;
  try {
    code = handler(buf);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  if (active->output.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(active->output);
    if (!file) {
      err << "error: cannot write " << active->output << '\n';
      return kExitUsage;
    }
    file << buf.str();
  }
  return code;
}

}  // namespace lrs
