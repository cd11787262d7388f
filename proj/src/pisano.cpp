#include "lrs/pisano.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lrs/linalg.hpp"

namespace lrs {

namespace {

std::uint64_t stateCount(std::size_t order, std::int64_t m, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < order; ++i) {
    if (count > cap / static_cast<std::uint64_t>(m)) return cap + 1;
    count *= static_cast<std::uint64_t>(m);
  }
  return count;
}

std::uint64_t encode(const std::vector<std::int64_t>& state, std::int64_t m) {
  std::uint64_t code = 0;
  for (std::int64_t v : state) code = code * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(v);
  return code;
}

}  // namespace

PeriodResult pisano(const RecurrenceSpec& spec, std::int64_t m, std::uint64_t maxStates) {
  if (m < 1) throw std::invalid_argument("pisano: modulus must be at least 1");
  if (stateCount(spec.order(), m, maxStates) > maxStates)
    throw std::length_error("pisano: m^d exceeds the state cap of " + std::to_string(maxStates));
  PeriodResult result;
  result.modulus = m;
  if (m == 1) {
    result.period = 1;
    return result;
  }
  const std::size_t d = spec.order();
  std::vector<std::int64_t> coeffs;
  for (std::int64_t c : spec.coeffs()) coeffs.push_back(((c % m) + m) % m);
  // state[j] = u(n + j)
  std::vector<std::int64_t> state;
  for (const BigInt& v : spec.init()) state.push_back(floorMod(v, m).convert_to<std::int64_t>());

  std::unordered_map<std::uint64_t, std::uint64_t> firstSeen;
  for (std::uint64_t n = 0;; ++n) {
    const auto [it, inserted] = firstSeen.emplace(encode(state, m), n);
    if (!inserted) {
      result.preperiod = it->second;
      result.period = n - it->second;
      return result;
    }
    __int128 next = 0;
    for (std::size_t j = 0; j < d; ++j) next += static_cast<__int128>(coeffs[j]) * state[d - 1 - j];
    state.erase(state.begin());
    state.push_back(static_cast<std::int64_t>(next % m));
  }
}

ParityCertificate parityCertificate(const RecurrenceSpec& spec, std::int64_t m, std::uint64_t maxStates) {
  if (m < 1) throw std::invalid_argument("parityCertificate: modulus must be at least 1");
  if (std::gcd(spec.coeffs().back(), m) != 1)
    throw std::domain_error("parityCertificate: state map is not invertible mod " + std::to_string(m));
  ParityCertificate cert;
  cert.period = pisano(spec, m, maxStates);
  const Matrix<BigInt> companion = companionMatrix<BigInt>(spec);
  cert.determinantMod = floorMod(bareissDeterminant(companion), m);
  const Matrix<BigInt> power = matrixPower(companion, cert.period.period, ModReduce{BigInt(m)});
  cert.identityAtPeriod = isIdentity(power);
  if (m == 1) cert.identityAtPeriod = true;
  const bool detMinusOne = cert.determinantMod == floorMod(BigInt(-1), m);
  cert.forcedEven = detMinusOne && m > 2 && cert.identityAtPeriod;
  if (cert.forcedEven && !cert.period.even())
    throw std::logic_error("parityCertificate: odd period despite det = -1");
  if (cert.forcedEven)
    cert.explanation = "det = -1 mod " + std::to_string(m) + " and M^period = I give (-1)^period = 1, so the period is even";
  else if (!detMinusOne)
    cert.explanation = "det = " + toString(cert.determinantMod) + " mod " + std::to_string(m) + "; no parity constraint";
  else
    cert.explanation = "det = -1 but m <= 2, so (-1)^period = 1 holds for either parity";
  return cert;
}

bool windowDivisibility(const RecurrenceSpec& spec, std::int64_t N, std::int64_t m, std::int64_t horizon) {
  if (N < 1) throw std::invalid_argument("windowDivisibility: window must be positive");
  if (m < 1) throw std::invalid_argument("windowDivisibility: modulus must be at least 1");
  if (horizon < 0) throw std::invalid_argument("windowDivisibility: horizon must be non-negative");
  if (m == 1) return true;
  const TermTable table(spec, static_cast<std::size_t>(horizon + N + 1));
  for (std::int64_t n = 0; n <= horizon; ++n)
    if (floorMod(table.window(n, N), m) != 0) return false;
  return true;
}

}  // namespace lrs
