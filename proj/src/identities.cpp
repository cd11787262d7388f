#include "lrs/identities.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include "lrs/higher_order.hpp"
#include "lrs/recurrence.hpp"
#include "lrs/tilings.hpp"

namespace lrs {

std::int64_t& Params::at(std::string_view axis) {
  if (axis == "n") return n;
  if (axis == "N") return N;
  if (axis == "k") return k;
  if (axis == "r") return r;
  if (axis == "j") return j;
  throw std::invalid_argument("unknown sweep axis: " + std::string(axis));
}

std::int64_t Params::at(std::string_view axis) const { return const_cast<Params&>(*this).at(axis); }

std::string toString(const Value& value) {
  if (const auto* b = std::get_if<BigInt>(&value)) return toString(*b);
  return std::get<QuadRat>(value).str();
}

namespace {

bool holds(const Value& lhs, const Value& rhs, Comparison comparison) {
  if (comparison == Comparison::Equal) return lhs == rhs;
  const auto* a = std::get_if<BigInt>(&lhs);
  const auto* b = std::get_if<BigInt>(&rhs);
  if (a == nullptr || b == nullptr) throw std::invalid_argument("ordering needs integer values");
  return *a < *b;
}

std::string describe(const IdentityCase& c) {
  std::ostringstream os;
  os << c.id << "{";
  for (std::size_t i = 0; i < c.axes.size(); ++i) {
    if (i) os << ",";
    os << c.axes[i].name << "=[" << c.axes[i].lo << "," << c.axes[i].hi << "]";
  }
  os << "}";
  return os.str();
}

// Depth-first walk of the axis product; returns false once a counterexample is recorded.
bool sweepAxes(const IdentityCase& c, std::size_t depth, Params& p, VerificationReport& report) {
  if (depth == c.axes.size()) {
    if (c.domain && !c.domain(p)) return true;
    ++report.checked;
    Counterexample cx;
    try {
      const Value lhs = c.lhs(p);
      const Value rhs = c.rhs(p);
      if (holds(lhs, rhs, c.comparison)) return true;
      cx.lhs = toString(lhs);
      cx.rhs = toString(rhs);
    } catch (const std::exception& e) {
      cx.error = e.what();
    }
    cx.identity = c.id;
    for (const auto& axis : c.axes) cx.params.emplace_back(axis.name, p.at(axis.name));
    report.counterexample = std::move(cx);
    return false;
  }
  const Axis& axis = c.axes[depth];
  for (std::int64_t v = axis.lo; v <= axis.hi; ++v) {
    p.at(axis.name) = v;
    if (!sweepAxes(c, depth + 1, p, report)) return false;
  }
  return true;
}

int sign(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

using Table = std::shared_ptr<const TermTable>;

Table table(const RecurrenceSpec& spec, std::int64_t size) {
  return std::make_shared<const TermTable>(spec, static_cast<std::size_t>(size));
}

std::vector<IdentityCase> generalRCases(std::int64_t r, std::int64_t nMax, std::int64_t NMax) {
  if (r < 1) throw std::invalid_argument("verifyGeneralRSum: r must be positive");
  const std::int64_t size = nMax + 4 * NMax + 8;
  Table f = table(lucasU(r, 1), size);
  Table g = table(lucasV(r, 1), size);
  const std::string tag = "[r=" + std::to_string(r) + "]";
  std::vector<IdentityCase> cases;
  cases.push_back({"general-r-shift" + tag,
                   {{"k", 0, 2 * NMax + 1}, {"n", 0, nMax}},
                   [f](const Params& p) -> Value { return BigInt((*f)[p.n + p.k] + sign(p.k) * (*f)[p.n - p.k]); },
                   [f, g](const Params& p) -> Value { return BigInt((*g)[p.k] * (*f)[p.n]); },
                   [](const Params& p) { return p.n >= p.k; }});
  cases.push_back({"general-r-partial-sum" + tag,
                   {{"n", 0, nMax}},
                   [f, r](const Params& p) -> Value { return BigInt(r * f->window(0, p.n + 1)); },
                   [f](const Params& p) -> Value { return BigInt((*f)[p.n] + (*f)[p.n + 1] - 1); }});
  cases.push_back({"general-r-g-divisible" + tag,
                   {{"N", 0, NMax}},
                   [g, r](const Params& p) -> Value { return BigInt((*g)[2 * p.N + 1] % r); },
                   [](const Params&) -> Value { return BigInt(0); }});
  cases.push_back({"general-r-4N+2-collapse" + tag,
                   {{"N", 0, NMax}, {"n", 0, nMax}},
                   [f](const Params& p) -> Value { return f->window(p.n, 4 * p.N + 2); },
                   [f, g, r](const Params& p) -> Value {
                     return BigInt(BigInt((*g)[2 * p.N + 1] / r) * ((*f)[p.n + 2 * p.N + 1] + (*f)[p.n + 2 * p.N]));
                   }});
  return cases;
}

}  // namespace

VerificationReport runIdentity(std::string identityId, const std::vector<IdentityCase>& cases) {
  VerificationReport report;
  report.identityId = std::move(identityId);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (i) report.rectangle += "; ";
    report.rectangle += describe(cases[i]);
  }
  for (const auto& c : cases) {
    Params p;
    if (!sweepAxes(c, 0, p, report)) break;
  }
  return report;
}

VerificationReport verifyPellSum4N(std::int64_t nMax, std::int64_t NMax) {
  Table P = table(pell(), nMax + 4 * NMax + 2);
  const QuadRat a(2, Rational(1), Rational(1));
  const QuadRat b(2, Rational(1), Rational(-1));
  const QuadRat invRoot2 = inv(QuadRat::root(2));
  return runIdentity(
      "pell-sum-4N",
      {{"pell-sum-4N",
        {{"N", 1, NMax}, {"n", 0, nMax}},
        [P](const Params& p) -> Value { return P->window(p.n, 4 * p.N); },
        [P](const Params& p) -> Value { return BigInt(2 * (*P)[2 * p.N] * (*P)[p.n + 2 * p.N]); }},
       {"pell-sum-4N-constant",
        {{"N", 1, NMax}},
        [P](const Params& p) -> Value { return QuadRat::rational(2, Rational(2 * (*P)[2 * p.N])); },
        [a, b, invRoot2](const Params& p) -> Value { return (pow(a, 2 * p.N) - pow(b, 2 * p.N)) * invRoot2; }}});
}

VerificationReport verifyPellShift(std::int64_t nMax, std::int64_t kMax) {
  Table P = table(pell(), nMax + kMax + 2);
  Table Q = table(pellLucas(), kMax + 2);
  return runIdentity("pell-shift",
                     {{"pell-shift",
                       {{"k", 0, kMax}, {"n", 0, nMax}},
                       [P](const Params& p) -> Value { return BigInt((*P)[p.n + p.k] + sign(p.k) * (*P)[p.n - p.k]); },
                       [P, Q](const Params& p) -> Value { return BigInt((*Q)[p.k] * (*P)[p.n]); },
                       [](const Params& p) { return p.n >= p.k; }}});
}

VerificationReport verifyFibSum4N(std::int64_t nMax, std::int64_t NMax) {
  Table F = table(fibonacci(), nMax + 4 * NMax + 2);
  Table L = table(lucas(), nMax + 4 * NMax + 2);
  return runIdentity("fib-sum-4N",
                     {{"fib-sum-4N",
                       {{"N", 1, NMax}, {"n", 0, nMax}},
                       [F](const Params& p) -> Value { return F->window(p.n, 4 * p.N); },
                       [F, L](const Params& p) -> Value { return BigInt((*F)[2 * p.N] * (*L)[p.n + 2 * p.N + 1]); }}});
}

VerificationReport verifyFibSum4N2(std::int64_t nMax, std::int64_t NMax) {
  Table F = table(fibonacci(), nMax + 4 * NMax + 4);
  Table L = table(lucas(), 2 * NMax + 2);
  return runIdentity("fib-sum-4N+2",
                     {{"fib-sum-4N+2",
                       {{"N", 0, NMax}, {"n", 0, nMax}},
                       [F](const Params& p) -> Value { return F->window(p.n, 4 * p.N + 2); },
                       [F, L](const Params& p) -> Value { return BigInt((*L)[2 * p.N + 1] * (*F)[p.n + 2 * p.N + 2]); }}});
}

VerificationReport verifyFibShift(std::int64_t nMax, std::int64_t kMax) {
  Table F = table(fibonacci(), nMax + kMax + 2);
  Table L = table(lucas(), kMax + 2);
  return runIdentity("fib-shift",
                     {{"fib-shift",
                       {{"k", 0, kMax}, {"n", 0, nMax}},
                       [F](const Params& p) -> Value { return BigInt((*F)[p.n + p.k] + sign(p.k) * (*F)[p.n - p.k]); },
                       [F, L](const Params& p) -> Value { return BigInt((*L)[p.k] * (*F)[p.n]); },
                       [](const Params& p) { return p.n >= p.k; }}});
}

VerificationReport verifyFibAuxiliary(std::int64_t nMax, std::int64_t kMax) {
  Table F = table(fibonacci(), nMax + kMax + 4);
  Table L = table(lucas(), nMax + 2);
  return runIdentity(
      "fib-aux",
      {{"fib-cassini",
        {{"n", 1, nMax}},
        [F](const Params& p) -> Value { return BigInt((*F)[p.n - 1] * (*F)[p.n + 1] - (*F)[p.n] * (*F)[p.n]); },
        [](const Params& p) -> Value { return BigInt(sign(p.n)); }},
       {"fib-addition",
        {{"k", 1, kMax}, {"n", 0, nMax}},
        [F](const Params& p) -> Value { return (*F)[p.n + p.k]; },
        [F](const Params& p) -> Value { return BigInt((*F)[p.n] * (*F)[p.k - 1] + (*F)[p.n + 1] * (*F)[p.k]); }},
       {"fib-lucas-link",
        {{"n", 1, nMax}},
        [L](const Params& p) -> Value { return (*L)[p.n]; },
        [F](const Params& p) -> Value { return BigInt((*F)[p.n - 1] + (*F)[p.n + 1]); }},
       {"fib-prefix-sum",
        {{"n", 1, nMax}},
        [F](const Params& p) -> Value { return BigInt(F->window(0, p.n) + 1); },
        [F](const Params& p) -> Value { return (*F)[p.n + 1]; }},
       {"fib-window-telescope",
        {{"k", 0, kMax}, {"n", 0, nMax}},
        [F](const Params& p) -> Value { return F->window(p.n, p.k + 1); },
        [F](const Params& p) -> Value { return BigInt((*F)[p.n + p.k + 2] - (*F)[p.n + 1]); }}});
}

VerificationReport verifyGeneralRSum(std::int64_t r, std::int64_t nMax, std::int64_t NMax) {
  return runIdentity("general-r-sum", generalRCases(r, nMax, NMax));
}

VerificationReport verifyLucasConverse(std::int64_t nMax, std::int64_t NMax, const std::vector<std::int64_t>& minusOneRs) {
  const std::int64_t size = nMax + 4 * NMax + 4;
  Table L = table(lucas(), size);
  Table Q = table(pellLucas(), size);
  Table P = table(pell(), size);
  Table F = table(fibonacci(), size);
  std::vector<IdentityCase> cases{
      {"lucas-sum-4N+2",
       {{"N", 0, NMax}, {"n", 0, nMax}},
       [L](const Params& p) -> Value { return L->window(p.n, 4 * p.N + 2); },
       [L](const Params& p) -> Value { return BigInt((*L)[2 * p.N + 1] * (*L)[2 * p.N + p.n + 2]); }},
      {"pell-lucas-sum-4N",
       {{"N", 1, NMax}, {"n", 0, nMax}},
       [Q](const Params& p) -> Value { return Q->window(p.n, 4 * p.N); },
       [P, Q](const Params& p) -> Value { return BigInt(2 * (*P)[2 * p.N] * (*Q)[2 * p.N + p.n]); }},
      {"alternating-fib-4N+2",
       {{"N", 0, NMax}, {"n", 1, nMax}},
       [F](const Params& p) -> Value {
         BigInt s = 0;
         for (std::int64_t i = 0; i < 4 * p.N + 2; ++i) s += sign(p.n + i) * (*F)[p.n + i];
         return s;
       },
       [F, L](const Params& p) -> Value {
         return BigInt((*L)[2 * p.N + 1] * sign(2 * p.N + p.n - 1) * (*F)[2 * p.N + p.n - 1]);
       }},
      {"alternating-pell-4N",
       {{"N", 1, NMax}, {"n", 1, nMax}},
       [P](const Params& p) -> Value {
         BigInt s = 0;
         for (std::int64_t i = 0; i < 4 * p.N; ++i) s += sign(p.n + i) * (*P)[p.n + i];
         return s;
       },
       [P](const Params& p) -> Value {
         return BigInt(2 * (*P)[2 * p.N] * sign(2 * p.N + p.n - 1) * (*P)[2 * p.N + p.n - 1]);
       }}};
  for (std::int64_t r : minusOneRs) {
    const std::string tag = "[r=" + std::to_string(r) + ",s=-1]";
    for (const auto kind : {LucasKind::First, LucasKind::Second}) {
      Table U = table(kind == LucasKind::First ? lucasU(r, -1) : lucasV(r, -1), size);
      cases.push_back({std::string(kind == LucasKind::First ? "minus-one-even-window-U" : "minus-one-even-window-V") + tag,
                       {{"N", 0, NMax}, {"n", 0, nMax}},
                       [U](const Params& p) -> Value { return U->window(p.n, p.N + 1); },
                       [U, r](const Params& p) -> Value {
                         return BigInt(evenWindowCoefficient(r, p.N).toInteger() * (*U)[p.n + p.N / 2]);
                       },
                       [](const Params& p) { return p.N % 2 == 0; }});
    }
  }
  return runIdentity("lucas-converse", cases);
}

VerificationReport verifyGenPellIdentities(std::int64_t kMax, std::int64_t nMax) {
  // tables[k][i] holds P_k^i.
  auto tables = std::make_shared<std::vector<std::vector<TermTable>>>();
  tables->resize(static_cast<std::size_t>(kMax + 1));
  for (std::int64_t k = 1; k <= kMax; ++k)
    for (std::int64_t i = 0; i < k; ++i)
      (*tables)[static_cast<std::size_t>(k)].emplace_back(genPell(k, i), static_cast<std::size_t>(nMax + 3 * k + 8));
  auto top = [tables](std::int64_t k) -> const TermTable& {
    return (*tables)[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)];
  };
  return runIdentity(
      "genpell-identities",
      {{"genpell-partial-sum",
        {{"k", 1, kMax}, {"n", 0, nMax}},
        [top](const Params& p) -> Value { return BigInt(2 * top(p.k).window(0, p.n + 1)); },
        [top](const Params& p) -> Value {
          BigInt s = -1;
          for (std::int64_t i = 0; i <= p.k; ++i) s += top(p.k)[p.n - i + 1];
          return s;
        },
        [](const Params& p) { return p.n >= p.k - 1; }},
       {"genpell-window-2k+2",
        {{"k", 1, kMax}, {"n", 0, nMax}},
        [top](const Params& p) -> Value { return top(p.k).window(p.n, 2 * p.k + 2); },
        [top](const Params& p) -> Value { return BigInt(4 * top(p.k)[p.n + 2 * p.k]); },
        [](const Params& p) { return p.n >= p.k; }},
       {"genpell-i-reduction",
        {{"k", 1, kMax}, {"j", 0, kMax - 1}, {"n", 0, nMax}},
        [tables](const Params& p) -> Value {
          return (*tables)[static_cast<std::size_t>(p.k)][static_cast<std::size_t>(p.k - 1 - p.j)][p.n];
        },
        [top](const Params& p) -> Value {
          BigInt s = top(p.k)[p.n];
          for (std::int64_t i = 0; i < p.j; ++i) s += top(p.k)[p.n - p.k + i];
          return s;
        },
        [](const Params& p) { return p.j <= p.k - 1 && p.n > p.k; }},
       {"genpell-early-powers",
        {{"k", 1, kMax}, {"j", 1, kMax}},
        [top](const Params& p) -> Value { return top(p.k)[p.k + p.j]; },
        [](const Params& p) -> Value { return BigInt(BigInt(1) << static_cast<unsigned>(p.j)); },
        [](const Params& p) { return p.j <= p.k; }}});
}

std::vector<std::string> identityIds() {
  return {"pell-sum-4N",   "pell-shift",       "fib-sum-4N",         "fib-sum-4N+2",
          "fib-shift",     "fib-aux",          "general-r-sum",      "lucas-converse",
          "genpell-identities", "genpell-window", "genfib-growth", "tiling-blocksum"};
}

VerificationReport verifyById(std::string_view id, const SweepBounds& b) {
  if (id == "pell-sum-4N") return verifyPellSum4N(b.nMax, b.NMax);
  if (id == "pell-shift") return verifyPellShift(b.nMax, b.kMax);
  if (id == "fib-sum-4N") return verifyFibSum4N(b.nMax, b.NMax);
  if (id == "fib-sum-4N+2") return verifyFibSum4N2(b.nMax, b.NMax);
  if (id == "fib-shift") return verifyFibShift(b.nMax, b.kMax);
  if (id == "fib-aux") return verifyFibAuxiliary(b.nMax, b.kMax);
  if (id == "general-r-sum") {
    std::vector<IdentityCase> cases;
    for (std::int64_t r = 1; r <= b.rMax; ++r)
      for (auto& c : generalRCases(r, b.nMax, b.NMax)) cases.push_back(std::move(c));
    return runIdentity("general-r-sum", cases);
  }
  if (id == "lucas-converse") return verifyLucasConverse(b.nMax, b.NMax);
  if (id == "genpell-identities") return verifyGenPellIdentities(b.kMax, b.nMax);
  if (id == "genpell-window") {
    VerificationReport last;
    std::uint64_t checked = 0;
    for (std::int64_t k = 1; k <= b.kMax; ++k)
      for (std::int64_t i = 0; i < k; ++i) {
        last = genPellSumCheck(k, i, b.nMax);
        checked += last.checked;
        if (!last.passed()) return last;
      }
    last.checked = checked;
    last.identityId = "genpell-window";
    last.rectangle = "k=[1," + std::to_string(b.kMax) + "], i=[0,k-1], n=[k," + std::to_string(b.nMax) + "]";
    return last;
  }
  if (id == "genfib-growth") {
    VerificationReport last;
    std::uint64_t checked = 0;
    for (std::int64_t k = 2; k <= 4; ++k) {
      last = genFibChecks(k, b.nMax);
      checked += last.checked;
      if (!last.passed()) return last;
    }
    last.checked = checked;
    last.identityId = "genfib-growth";
    last.rectangle = "k=[2,4], r=[0," + std::to_string(b.nMax) + "]";
    return last;
  }
  if (id == "tiling-blocksum") {
    VerificationReport last;
    std::uint64_t checked = 0;
    for (auto [a, w] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}})
      for (std::int64_t k = 1; k <= 4; ++k) {
        last = blockSumCheck(k, b.nMax, a, w);
        checked += last.checked;
        if (!last.passed()) return last;
      }
    last.checked = checked;
    last.identityId = "tiling-blocksum";
    last.rectangle = "k=[1,4], (a,b) in {(2,1),(3,1),(3,2)}, index<=" + std::to_string(b.nMax);
    return last;
  }
  throw std::invalid_argument("unknown identity id: " + std::string(id));
}

}  // namespace lrs
