#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "esa/rational.hpp"

namespace esa {

// A dyadic (base 2) or tetradic (base 4) rational in [0,1] stored by its
// digit expansion lambda_0 . lambda_1 ... lambda_depth. Only the value 1
// has lambda_0 = 1; the last digit is nonzero except for the value 0, whose
// depth is 0 by convention.
class Level {
 public:
  Level() = default;

  // Level with value units / base^n. Throws DomainError outside [0,1].
  static Level from_units(int base, std::uint64_t units, int n);

  // Expansion of an exact rational at depth bound n. Throws DomainError if
  // value * base^n is not an integer or value lies outside [0,1].
  static Level expand(int base, const Rational& value, int n);

  int base() const { return base_; }
  int depth() const { return static_cast<int>(digits_.size()) - 1; }
  const std::vector<int>& digits() const { return digits_; }
  // Digit alpha, zero past the depth.
  int digit(int alpha) const {
    return alpha < static_cast<int>(digits_.size()) ? digits_[alpha] : 0;
  }
  bool is_zero() const { return digits_.size() == 1 && digits_[0] == 0; }
  bool is_one() const { return digits_.size() == 1 && digits_[0] == 1; }

  // value * base^n; requires depth() <= n.
  std::uint64_t units(int n) const;
  Rational value() const;
  // Truncation R_tau = sum_{alpha <= tau} lambda_alpha / base^alpha.
  Level truncated(int tau) const;

  // "p/q" form of the value.
  std::string to_string() const;

  // Zero-padded lexicographic digit order, which equals numeric order.
  std::strong_ordering operator<=>(const Level& other) const;
  bool operator==(const Level& other) const = default;

 private:
  int base_ = 2;
  std::vector<int> digits_{0};
};

}  // namespace esa
