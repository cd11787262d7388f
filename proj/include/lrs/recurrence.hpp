#pragma once

// Linear recurrences u(n) = c_1 u(n-1) + ... + c_d u(n-d) with exact integer
// terms: the recurrence type, the builtin families, and term evaluation by
// iteration, by companion-matrix powers, and modulo m.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrs/linalg.hpp"
#include "lrs/numeric.hpp"

namespace lrs {

class RecurrenceSpec {
 public:
  /// Throws std::invalid_argument unless coeffs and init have the same
  /// positive length, the last coefficient is nonzero and init is not all zero.
  RecurrenceSpec(std::vector<std::int64_t> coeffs, std::vector<BigInt> init, std::string label = {});

  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }
  std::span<const BigInt> init() const noexcept { return init_; }
  const std::string& label() const noexcept { return label_; }

  /// True when |c_d| = 1, i.e. the recurrence runs backward over the integers.
  bool reversible() const noexcept;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;

 private:
  std::vector<std::int64_t> coeffs_;
  std::vector<BigInt> init_;
  std::string label_;
};

// Builtin families.
RecurrenceSpec pell();
RecurrenceSpec pellLucas();
RecurrenceSpec fibonacci();
RecurrenceSpec lucas();
/// Lucas sequence of the first kind: U(0)=0, U(1)=1, U(n)=rU(n-1)+sU(n-2).
RecurrenceSpec lucasU(std::int64_t r, std::int64_t s);
/// Lucas sequence of the second kind: V(0)=2, V(1)=r.
RecurrenceSpec lucasV(std::int64_t r, std::int64_t s);
/// Generalized Pell (k,i): p(n)=2p(n-1)+p(n-k-1), i+1 leading zeros then ones.
RecurrenceSpec genPell(std::int64_t k, std::int64_t i);
/// Order-k Fibonacci. Internal index j holds the value at index j+1 of the
/// one-based convention f_k(1)=...=f_k(k-1)=0, f_k(k)=1.
RecurrenceSpec genFib(std::int64_t k);

/// Builtin lookup by name: pell, fibonacci, lucas, pellLucas, lucasU, lucasV,
/// genPell, genFib. Throws std::invalid_argument on unknown names or bad params.
RecurrenceSpec builtin(std::string_view name, std::span<const std::int64_t> params = {});

/// Parses "name" or "name(p1,p2,...)", e.g. "genPell(2,1)".
RecurrenceSpec parseSequence(std::string_view text);

/// Exact u(n). Negative n requires a reversible spec (std::domain_error otherwise).
BigInt term(const RecurrenceSpec& spec, std::int64_t n);

/// u(from), ..., u(from+count-1) in one pass.
std::vector<BigInt> terms(const RecurrenceSpec& spec, std::int64_t from, std::size_t count);

/// First row holds the coefficients, the subdiagonal is one.
template <typename Scalar = BigInt>
Matrix<Scalar> companionMatrix(const RecurrenceSpec& spec) {
  const auto d = static_cast<Eigen::Index>(spec.order());
  Matrix<Scalar> m = Matrix<Scalar>::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) m(0, j) = Scalar(spec.coeffs()[static_cast<std::size_t>(j)]);
  for (Eigen::Index i = 1; i < d; ++i) m(i, i - 1) = Scalar(1);
  return m;
}

/// State vector (u(d-1), ..., u(0)), matching companionMatrix row order.
Vector<BigInt> initialState(const RecurrenceSpec& spec);

/// u(n) from M^n applied to the initial state.
BigInt termByMatrix(const RecurrenceSpec& spec, std::uint64_t n);

/// u(n) mod m in [0, m) with every intermediate reduced; m >= 2.
std::int64_t termMod(const RecurrenceSpec& spec, std::uint64_t n, std::int64_t m);

/// Sum of `length` consecutive terms starting at index n.
BigInt windowSum(const RecurrenceSpec& spec, std::int64_t n, std::int64_t length);

/// Immutable table of u(0..size-1) with prefix sums, for sweeps that touch the
/// same indices many times.
class TermTable {
 public:
  TermTable(const RecurrenceSpec& spec, std::size_t size);

  std::size_t size() const noexcept { return terms_.size(); }
  const BigInt& operator[](std::int64_t n) const;
  /// Sum of u(n..n+length-1); all indices must lie in the table.
  BigInt window(std::int64_t n, std::int64_t length) const;
  const RecurrenceSpec& spec() const noexcept { return spec_; }

 private:
  RecurrenceSpec spec_;
  std::vector<BigInt> terms_;
  std::vector<BigInt> prefix_;  // prefix_[i] = u(0) + ... + u(i-1)
};

}  // namespace lrs
