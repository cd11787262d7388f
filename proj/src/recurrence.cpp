#include "lrs/recurrence.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <stdexcept>

namespace lrs {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

std::string joined(std::string_view name, std::initializer_list<std::int64_t> params) {
  std::string s(name);
  s += '(';
  bool first = true;
  for (auto p : params) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  }
  s += ')';
  return s;
}

// Rolling window of the last `order` terms, oldest first.
class Stepper {
 public:
  Stepper(const RecurrenceSpec& spec, std::deque<BigInt> window) : spec_(spec), window_(std::move(window)) {}

  const BigInt& front() const { return window_.front(); }

  void forward() {
    BigInt next = 0;
    const auto c = spec_.coeffs();
    const std::size_t d = c.size();
    for (std::size_t i = 0; i < d; ++i) next += c[i] * window_[d - 1 - i];
    window_.pop_front();
    window_.push_back(std::move(next));
  }

  // Requires |c_d| = 1: u(m-1) = c_d * (u(m+d-1) - sum_{i<d} c_i u(m+d-1-i)).
  void backward() {
    const auto c = spec_.coeffs();
    const std::size_t d = c.size();
    BigInt rest = window_[d - 1];
    for (std::size_t i = 1; i < d; ++i) rest -= c[i - 1] * window_[d - 1 - i];
    window_.pop_back();
    window_.push_front(rest * c[d - 1]);
  }

 private:
  const RecurrenceSpec& spec_;
  std::deque<BigInt> window_;
};

// Stepper positioned so that front() is u(n).
Stepper stepperAt(const RecurrenceSpec& spec, std::int64_t n) {
  if (n < 0 && !spec.reversible())
    throw std::domain_error("term: negative index needs |c_d| = 1 for " + spec.label());
  Stepper s(spec, std::deque<BigInt>(spec.init().begin(), spec.init().end()));
  for (std::int64_t i = 0; i < n; ++i) s.forward();
  for (std::int64_t i = 0; i > n; --i) s.backward();
  return s;
}

}  // namespace

RecurrenceSpec::RecurrenceSpec(std::vector<std::int64_t> coeffs, std::vector<BigInt> init, std::string label)
    : coeffs_(std::move(coeffs)), init_(std::move(init)), label_(std::move(label)) {
  if (coeffs_.empty()) throw std::invalid_argument("RecurrenceSpec: order must be at least 1");
  if (init_.size() != coeffs_.size())
    throw std::invalid_argument("RecurrenceSpec: need exactly one initial value per coefficient");
  if (coeffs_.back() == 0) throw std::invalid_argument("RecurrenceSpec: last coefficient must be nonzero");
  if (std::all_of(init_.begin(), init_.end(), [](const BigInt& v) { return v == 0; }))
    throw std::invalid_argument("RecurrenceSpec: initial values are all zero");
  if (label_.empty()) label_ = "custom";
}

bool RecurrenceSpec::reversible() const noexcept { return std::llabs(coeffs_.back()) == 1; }

RecurrenceSpec pell() { return {{2, 1}, {0, 1}, "pell"}; }
RecurrenceSpec pellLucas() { return {{2, 1}, {2, 2}, "pellLucas"}; }
RecurrenceSpec fibonacci() { return {{1, 1}, {0, 1}, "fibonacci"}; }
RecurrenceSpec lucas() { return {{1, 1}, {2, 1}, "lucas"}; }

RecurrenceSpec lucasU(std::int64_t r, std::int64_t s) {
  if (s == 0) throw std::invalid_argument("lucasU: s must be nonzero");
  return {{r, s}, {0, 1}, joined("lucasU", {r, s})};
}

RecurrenceSpec lucasV(std::int64_t r, std::int64_t s) {
  if (s == 0) throw std::invalid_argument("lucasV: s must be nonzero");
  return {{r, s}, {2, r}, joined("lucasV", {r, s})};
}

RecurrenceSpec genPell(std::int64_t k, std::int64_t i) {
  if (k < 1) throw std::invalid_argument("genPell: k must be at least 1");
  if (i < 0 || i > k - 1) throw std::invalid_argument("genPell: i must lie in [0, k-1]");
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k + 1), 0);
  coeffs.front() = 2;
  coeffs.back() = 1;
  std::vector<BigInt> init(static_cast<std::size_t>(k + 1), 0);
  for (std::int64_t j = i + 1; j <= k; ++j) init[static_cast<std::size_t>(j)] = 1;
  return {std::move(coeffs), std::move(init), joined("genPell", {k, i})};
}

RecurrenceSpec genFib(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("genFib: k must be at least 1");
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k), 1);
  std::vector<BigInt> init(static_cast<std::size_t>(k), 0);
  init.back() = 1;
  return {std::move(coeffs), std::move(init), joined("genFib", {k})};
}

RecurrenceSpec builtin(std::string_view name, std::span<const std::int64_t> params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument(std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
  };
  if (name == "pell") return need(0), pell();
  if (name == "fibonacci") return need(0), fibonacci();
  if (name == "lucas") return need(0), lucas();
  if (name == "pellLucas") return need(0), pellLucas();
  if (name == "lucasU") return need(2), lucasU(params[0], params[1]);
  if (name == "lucasV") return need(2), lucasV(params[0], params[1]);
  if (name == "genPell") return need(2), genPell(params[0], params[1]);
  if (name == "genFib") return need(1), genFib(params[0]);
  throw std::invalid_argument("unknown sequence name: " + std::string(name));
}

RecurrenceSpec parseSequence(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos) return builtin(text);
  if (text.back() != ')') throw std::invalid_argument("malformed sequence: " + std::string(text));
  std::vector<std::int64_t> params;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (!body.empty()) {
    const auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("malformed sequence parameter: " + std::string(item));
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return builtin(trim(text.substr(0, open)), params);
}

BigInt term(const RecurrenceSpec& spec, std::int64_t n) {
  if (n >= 0 && static_cast<std::size_t>(n) < spec.order()) return spec.init()[static_cast<std::size_t>(n)];
  return stepperAt(spec, n).front();
}

std::vector<BigInt> terms(const RecurrenceSpec& spec, std::int64_t from, std::size_t count) {
  std::vector<BigInt> out;
  out.reserve(count);
  if (count == 0) return out;
  Stepper s = stepperAt(spec, from);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(s.front());
    if (i + 1 < count) s.forward();
  }
  return out;
}

Vector<BigInt> initialState(const RecurrenceSpec& spec) {
  const auto d = static_cast<Eigen::Index>(spec.order());
  Vector<BigInt> state(d);
  for (Eigen::Index i = 0; i < d; ++i) state(i) = spec.init()[static_cast<std::size_t>(d - 1 - i)];
  return state;
}

BigInt termByMatrix(const RecurrenceSpec& spec, std::uint64_t n) {
  const Matrix<BigInt> power = matrixPower(companionMatrix(spec), n);
  const Vector<BigInt> state = power * initialState(spec);
  return state(state.size() - 1);
}

std::int64_t termMod(const RecurrenceSpec& spec, std::uint64_t n, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("termMod: modulus must be at least 2");
  const ModReduce reduce{BigInt(m)};
  const Matrix<BigInt> power = matrixPower(companionMatrix(spec), n, reduce);
  Vector<BigInt> state = initialState(spec);
  for (Eigen::Index i = 0; i < state.size(); ++i) state(i) = floorMod(state(i), reduce.modulus);
  const Vector<BigInt> moved = power * state;
  return floorMod(moved(moved.size() - 1), reduce.modulus).convert_to<std::int64_t>();
}

BigInt windowSum(const RecurrenceSpec& spec, std::int64_t n, std::int64_t length) {
  if (length < 1) throw std::invalid_argument("windowSum: window length must be positive");
  Stepper s = stepperAt(spec, n);
  BigInt total = 0;
  for (std::int64_t i = 0; i < length; ++i) {
    total += s.front();
    if (i + 1 < length) s.forward();
  }
  return total;
}

TermTable::TermTable(const RecurrenceSpec& spec, std::size_t size) : spec_(spec), terms_(terms(spec, 0, size)) {
  prefix_.reserve(size + 1);
  prefix_.emplace_back(0);
  for (const auto& t : terms_) prefix_.push_back(prefix_.back() + t);
}

const BigInt& TermTable::operator[](std::int64_t n) const {
  if (n < 0 || static_cast<std::size_t>(n) >= terms_.size())
    throw std::out_of_range("TermTable: index " + std::to_string(n) + " outside table of " + spec_.label());
  return terms_[static_cast<std::size_t>(n)];
}

BigInt TermTable::window(std::int64_t n, std::int64_t length) const {
  if (length < 1) throw std::invalid_argument("TermTable::window: length must be positive");
  if (n < 0 || static_cast<std::size_t>(n + length) > terms_.size())
    throw std::out_of_range("TermTable::window: range outside table of " + spec_.label());
  return prefix_[static_cast<std::size_t>(n + length)] - prefix_[static_cast<std::size_t>(n)];
}

}  // namespace lrs
