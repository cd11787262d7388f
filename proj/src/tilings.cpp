#include "lrs/tilings.hpp"

#include <memory>
#include <stdexcept>

#include "lrs/recurrence.hpp"

namespace lrs {

void TilingConfig::validate() const {
  if (k < 1) throw std::invalid_argument("tiling: k must be at least 1");
  if (n < 0) throw std::invalid_argument("tiling: board length must be non-negative");
  if (a < 1 || b < 1) throw std::invalid_argument("tiling: weights must be positive");
}

namespace {

std::vector<BigInt> countTable(std::int64_t k, std::int64_t a, std::int64_t b, std::int64_t upTo) {
  std::vector<BigInt> p(static_cast<std::size_t>(upTo + 1));
  p[0] = 1;
  for (std::int64_t j = 1; j <= upTo; ++j) {
    BigInt v = a * p[static_cast<std::size_t>(j - 1)];
    if (j - k - 1 >= 0) v += b * p[static_cast<std::size_t>(j - k - 1)];
    p[static_cast<std::size_t>(j)] = std::move(v);
  }
  return p;
}

struct Walker {
  const TilingConfig& config;
  bool list;
  EnumerationResult& out;
  Tiling current;

  void walk(std::int64_t remaining) {
    if (remaining == 0) {
      ++out.count;
      if (list) out.tilings.push_back(current);
      return;
    }
    for (std::int64_t c = 0; c < config.a; ++c) {
      current.push_back({Piece::Kind::Square, c, 1});
      walk(remaining - 1);
      current.pop_back();
    }
    if (remaining >= config.k + 1)
      for (std::int64_t t = 0; t < config.b; ++t) {
        current.push_back({Piece::Kind::Omino, t, config.k + 1});
        walk(remaining - config.k - 1);
        current.pop_back();
      }
  }
};

}  // namespace

BigInt countDP(const TilingConfig& config) {
  config.validate();
  return countTable(config.k, config.a, config.b, config.n).back();
}

EnumerationResult enumerate(const TilingConfig& config, const EnumerationOptions& options) {
  config.validate();
  if (config.a > 4 || config.b > 4) throw std::invalid_argument("enumerate: a and b must be at most 4");
  if (countDP(config) > options.limit)
    throw std::length_error("enumerate: more than " + std::to_string(options.limit) + " tilings");
  EnumerationResult result;
  Walker walker{config, options.list, result, {}};
  walker.walk(config.n);
  return result;
}

std::string encode(const Tiling& tiling, const TilingConfig& config) {
  const bool plain = config.a == 2 && config.b == 1;
  std::string s;
  for (const Piece& piece : tiling) {
    if (!s.empty()) s += ' ';
    if (piece.kind == Piece::Kind::Square)
      s += plain ? (piece.type == 0 ? "B" : "W") : "S" + std::to_string(piece.type);
    else
      s += "G" + std::to_string(piece.length) + (plain ? "" : "." + std::to_string(piece.type));
  }
  return s;
}

namespace {

BigInt blockSumBody(const std::vector<BigInt>& p, std::int64_t k, std::int64_t n, std::int64_t r, std::int64_t a,
                    std::int64_t b) {
  BigInt s = 0;
  BigInt weight = 1;
  for (std::int64_t m = n; m >= 0; --m) {
    s += weight * p[static_cast<std::size_t>(m * (k + 1) + r)];
    weight *= b;
  }
  return a * s;
}

BigInt power(std::int64_t base, std::int64_t e) {
  BigInt out = 1;
  for (std::int64_t i = 0; i < e; ++i) out *= base;
  return out;
}

void requireBlock(std::int64_t k, std::int64_t n, std::int64_t r, std::int64_t a, std::int64_t b) {
  TilingConfig{k, n, a, b}.validate();
  if (r < 0 || r > k) throw std::invalid_argument("blockSum: need 0 <= r <= k");
}

}  // namespace

BigInt blockSum(std::int64_t k, std::int64_t n, std::int64_t r, std::int64_t a, std::int64_t b) {
  requireBlock(k, n, r, a, b);
  const auto p = countTable(k, a, b, (k + 1) * n + r);
  return blockSumBody(p, k, n, r, a, b) + (r == k ? power(b, n + 1) : BigInt(0));
}

BigInt blockSumLiteral(std::int64_t k, std::int64_t n, std::int64_t r, std::int64_t a, std::int64_t b) {
  requireBlock(k, n, r, a, b);
  const auto p = countTable(k, a, b, (k + 1) * n + r);
  return blockSumBody(p, k, n, r, a, b) + (r == k ? 1 : 0);
}

VerificationReport blockSumCheck(std::int64_t k, std::int64_t nMax, std::int64_t a, std::int64_t b) {
  TilingConfig{k, nMax, a, b}.validate();
  auto p = std::make_shared<const std::vector<BigInt>>(countTable(k, a, b, nMax + 1));
  const std::string tag = "[k=" + std::to_string(k) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) + "]";
  const std::int64_t blocks = nMax / (k + 1);
  auto rhs = [p, k, a, b](std::int64_t n, std::int64_t r) {
    return blockSumBody(*p, k, n, r, a, b) + (r == k ? power(b, n + 1) : BigInt(0));
  };
  std::vector<IdentityCase> cases;
  cases.push_back({"tiling-block-sum" + tag,
                   {{"r", 0, k}, {"n", 0, blocks}},
                   [p, k](const Params& q) -> Value { return (*p)[static_cast<std::size_t>((k + 1) * q.n + q.r + 1)]; },
                   [rhs](const Params& q) -> Value { return rhs(q.n, q.r); },
                   [k, nMax](const Params& q) { return (k + 1) * q.n + q.r + 1 <= nMax; }});
  if (a == 2 && b == 1) {
    // Summing the block sums over every residue gives 2 sum_{j<=M} p(j) + 1
    // with M = (k+1)n + k, which is the partial-sum identity for P_k^{k-1}.
    auto pell = std::make_shared<const TermTable>(genPell(k, k - 1), static_cast<std::size_t>(nMax + 2 * k + 3));
    cases.push_back({"tiling-partial-sum-consequence" + tag,
                     {{"n", 0, blocks}},
                     [rhs, k](const Params& q) -> Value {
                       BigInt s = -1;
                       for (std::int64_t r = 0; r <= k; ++r) s += rhs(q.n, r);
                       return s;
                     },
                     [pell, k](const Params& q) -> Value {
                       const std::int64_t top = (k + 1) * q.n + 2 * k;
                       BigInt s = -1;
                       for (std::int64_t i = 0; i <= k; ++i) s += (*pell)[top - i + 1];
                       return s;
                     },
                     [k, nMax](const Params& q) { return (k + 1) * q.n + k + 1 <= nMax; }});
  }
  return runIdentity("tiling-blocksum" + tag, cases);
}

}  // namespace lrs
