#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "esa/errors.hpp"
#include "esa/rational.hpp"

namespace esa {

enum class NormKind { l1, summing };

inline std::string norm_name(NormKind k) { return k == NormKind::l1 ? "l1" : "summing"; }
inline NormKind parse_norm(const std::string& s) {
  if (s == "l1") return NormKind::l1;
  if (s == "summing") return NormKind::summing;
  throw DomainError("unknown norm '" + s + "'");
}

// A constant stretch of coordinates start, ..., start + length - 1 (1-based).
template <class T>
struct Run {
  std::uint64_t start = 1;
  std::uint64_t length = 1;
  T value{};

  std::uint64_t end() const { return start + length; }  // one past the last
  bool operator==(const Run&) const = default;
};

// Finitely supported sequence stored as sorted, disjoint, maximal runs of
// nonzero values. Immutable in spirit: all operations return new vectors.
template <class T>
class RunVector {
 public:
  RunVector() = default;

  // Sorts nothing: runs must be increasing and disjoint. Zero runs are
  // dropped and touching equal runs merged.
  static RunVector from_runs(const std::vector<Run<T>>& runs) {
    RunVector v;
    for (const auto& r : runs) v.append(r.start, r.length, r.value);
    return v;
  }

  // Coefficients a_1, a_2, ... placed at first_index, first_index + 1, ...
  static RunVector from_dense(std::span<const T> coeffs, std::uint64_t first_index = 1) {
    RunVector v;
    for (std::size_t i = 0; i < coeffs.size(); ++i) v.append(first_index + i, 1, coeffs[i]);
    return v;
  }

  // Appends a run at or after the current end of support.
  void append(std::uint64_t start, std::uint64_t length, const T& value) {
    if (start == 0) throw DomainError("coordinates are 1-based");
    if (length == 0 || value == T(0)) return;
    if (!runs_.empty()) {
      Run<T>& last = runs_.back();
      if (start < last.end()) throw DomainError("runs must be increasing and disjoint");
      if (start == last.end() && last.value == value) {
        last.length += length;
        return;
      }
    }
    runs_.push_back(Run<T>{start, length, value});
  }

  const std::vector<Run<T>>& runs() const { return runs_; }
  bool is_zero() const { return runs_.empty(); }
  // Last coordinate of the support, 0 for the zero vector.
  std::uint64_t support_end() const { return runs_.empty() ? 0 : runs_.back().end() - 1; }

  T at(std::uint64_t i) const {
    auto it = std::upper_bound(runs_.begin(), runs_.end(), i,
                               [](std::uint64_t x, const Run<T>& r) { return x < r.start; });
    if (it == runs_.begin()) return T(0);
    --it;
    return i < it->end() ? it->value : T(0);
  }

  // Coefficients 1..length.
  std::vector<T> to_dense(std::uint64_t length) const {
    std::vector<T> out(length, T(0));
    for (const auto& r : runs_)
      for (std::uint64_t i = r.start; i < r.end() && i <= length; ++i) out[i - 1] = r.value;
    return out;
  }

  // Coordinate i moves to i + t.
  RunVector shifted(std::uint64_t t) const {
    RunVector v = *this;
    for (auto& r : v.runs_) r.start += t;
    return v;
  }

  RunVector operator-() const {
    RunVector v = *this;
    for (auto& r : v.runs_) r.value = -r.value;
    return v;
  }

  RunVector scaled(const T& c) const {
    if (c == T(0)) return {};
    RunVector v = *this;
    for (auto& r : v.runs_) r.value = r.value * c;
    return v;
  }

  friend RunVector combine(const RunVector& a, const RunVector& b, int sign_b) {
    RunVector out;
    std::size_t i = 0, j = 0;
    std::uint64_t pos = 1;
    const auto& ra = a.runs_;
    const auto& rb = b.runs_;
    while (i < ra.size() || j < rb.size()) {
      // Skip to the next coordinate covered by either vector.
      std::uint64_t next = UINT64_MAX;
      if (i < ra.size()) next = std::min(next, std::max(pos, ra[i].start));
      if (j < rb.size()) next = std::min(next, std::max(pos, rb[j].start));
      pos = next;
      const bool in_a = i < ra.size() && ra[i].start <= pos;
      const bool in_b = j < rb.size() && rb[j].start <= pos;
      std::uint64_t stop = UINT64_MAX;
      if (in_a) stop = std::min(stop, ra[i].end());
      else if (i < ra.size()) stop = std::min(stop, ra[i].start);
      if (in_b) stop = std::min(stop, rb[j].end());
      else if (j < rb.size()) stop = std::min(stop, rb[j].start);
      T value = in_a ? ra[i].value : T(0);
      if (in_b) value = sign_b > 0 ? T(value + rb[j].value) : T(value - rb[j].value);
      out.append(pos, stop - pos, value);
      pos = stop;
      if (in_a && pos == ra[i].end()) ++i;
      if (in_b && pos == rb[j].end()) ++j;
    }
    return out;
  }

  friend RunVector operator+(const RunVector& a, const RunVector& b) { return combine(a, b, +1); }
  friend RunVector operator-(const RunVector& a, const RunVector& b) { return combine(a, b, -1); }
  bool operator==(const RunVector&) const = default;

 private:
  std::vector<Run<T>> runs_;
};

using SignVector = RunVector<std::int64_t>;
using RationalVector = RunVector<Rational>;

template <class T>
T l1_norm(const RunVector<T>& v) {
  T total(0);
  for (const auto& r : v.runs()) {
    const T a = r.value < T(0) ? T(-r.value) : r.value;
    total += a * T(r.length);
  }
  return total;
}

// Within a run the prefix sum is monotone, so only the run end matters.
template <class T>
T summing_norm(const RunVector<T>& v) {
  T prefix(0), best(0);
  for (const auto& r : v.runs()) {
    prefix += r.value * T(r.length);
    const T a = prefix < T(0) ? T(-prefix) : prefix;
    if (a > best) best = a;
  }
  return best;
}

template <class T>
T norm(NormKind kind, const RunVector<T>& v) {
  return kind == NormKind::l1 ? l1_norm(v) : summing_norm(v);
}

// Dense reference versions used as oracles in tests.
template <class T>
T dense_l1_norm(std::span<const T> a) {
  T total(0);
  for (const T& x : a) total += x < T(0) ? T(-x) : x;
  return total;
}

template <class T>
T dense_summing_norm(std::span<const T> a) {
  T prefix(0), best(0);
  for (const T& x : a) {
    prefix += x;
    const T m = prefix < T(0) ? T(-prefix) : prefix;
    if (m > best) best = m;
  }
  return best;
}

template <class T>
T dense_norm(NormKind kind, std::span<const T> a) {
  return kind == NormKind::l1 ? dense_l1_norm(a) : dense_summing_norm(a);
}

inline RationalVector to_rational(const SignVector& v) {
  RationalVector out;
  for (const auto& r : v.runs()) out.append(r.start, r.length, Rational(r.value));
  return out;
}

}  // namespace esa
