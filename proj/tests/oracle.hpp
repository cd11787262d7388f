#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library: sequences are rebuilt by direct iteration, periods
// by scanning for the first repeat, and tilings by explicit recursion.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oracle {

using Int = boost::multiprecision::mpz_int;
using Q = boost::multiprecision::mpq_rational;

inline std::vector<Int> iterate(const std::vector<std::int64_t>& c, const std::vector<Int>& init, std::size_t count) {
  std::vector<Int> u(init.begin(), init.end());
  while (u.size() < count) {
    Int next = 0;
    for (std::size_t j = 0; j < c.size(); ++j) next += c[j] * u[u.size() - 1 - j];
    u.push_back(next);
  }
  u.resize(count);
  return u;
}

inline std::vector<Int> pell(std::size_t n) { return iterate({2, 1}, {0, 1}, n); }
inline std::vector<Int> fib(std::size_t n) { return iterate({1, 1}, {0, 1}, n); }
inline std::vector<Int> lucas(std::size_t n) { return iterate({1, 1}, {2, 1}, n); }

inline Int window(const std::vector<Int>& u, std::size_t n, std::size_t len) {
  Int s = 0;
  for (std::size_t i = 0; i < len; ++i) s += u[n + i];
  return s;
}

struct Relation {
  Int constant;
  std::int64_t offset;
};

// Tries offsets 0..N+2 in order, comparing exact rationals sum/target at every
// n in [nMin, horizon]; returns the first offset with a constant positive
// integer ratio.
inline std::optional<Relation> findRelation(const std::vector<Int>& u, std::size_t N, std::size_t nMin,
                                            std::size_t horizon) {
  for (std::size_t k = 0; k <= N + 2; ++k) {
    std::optional<Q> ratio;
    bool ok = true;
    for (std::size_t n = nMin; n <= horizon && ok; ++n) {
      const Int s = window(u, n, N);
      const Int& t = u[n + k];
      if (t == 0) {
        ok = s == 0;
        continue;
      }
      const Q q(s, t);
      if (!ratio) ratio = q;
      else ok = *ratio == q;
    }
    if (ok && ratio && denominator(*ratio) == 1 && *ratio > 0)
      return Relation{numerator(*ratio), static_cast<std::int64_t>(k)};
  }
  return std::nullopt;
}

// Smallest p >= 1 with u(n+p) = u(n) mod m for all n in [start, start+span),
// tried from start = 0 upward. Slow but obviously correct for small m.
inline std::pair<std::uint64_t, std::uint64_t> period(const std::vector<std::int64_t>& c, const std::vector<Int>& init,
                                                      std::int64_t m, std::uint64_t maxPeriod) {
  const std::size_t span = 4 * c.size() + 8;
  std::vector<std::int64_t> r;
  {
    std::vector<std::int64_t> state;
    for (const auto& v : init) state.push_back(static_cast<std::int64_t>(((v % m) + m) % m));
    r = state;
    while (r.size() < 3 * maxPeriod + span + 8) {
      std::int64_t next = 0;
      for (std::size_t j = 0; j < c.size(); ++j) next = (next + ((c[j] % m) + m) % m * r[r.size() - 1 - j]) % m;
      r.push_back(next);
    }
  }
  for (std::uint64_t start = 0; start <= maxPeriod; ++start)
    for (std::uint64_t p = 1; p <= maxPeriod; ++p) {
      bool ok = true;
      for (std::uint64_t n = start; n < start + 2 * p + span && ok; ++n) ok = r[n] == r[n + p];
      if (ok) return {start, p};
    }
  return {0, 0};
}

// Tilings of length n with `a` square colours and `b` omino types of length k+1.
inline std::uint64_t countTilings(std::int64_t k, std::int64_t n, std::int64_t a, std::int64_t b) {
  if (n == 0) return 1;
  std::uint64_t total = static_cast<std::uint64_t>(a) * countTilings(k, n - 1, a, b);
  if (n >= k + 1) total += static_cast<std::uint64_t>(b) * countTilings(k, n - k - 1, a, b);
  return total;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x5eed1234ULL ^ salt); }

inline std::int64_t uniform(std::mt19937_64& g, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
}

}  // namespace oracle
