#include "esa/level.hpp"

#include "esa/errors.hpp"

namespace esa {

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_base(int base) {
  if (base != 2 && base != 4) throw DomainError("level base must be 2 or 4");
}

}  // namespace

Level Level::from_units(int base, std::uint64_t units, int n) {
  check_base(base);
  if (n < 0 || n > 30) throw DomainError("level depth bound out of range");
  const std::uint64_t denom = ipow(base, n);
  if (units > denom) throw DomainError("level value exceeds 1");
  Level lv;
  lv.base_ = base;
  if (units == denom) {
    lv.digits_ = {1};
    return lv;
  }
  lv.digits_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::uint64_t rest = units;
  for (int alpha = n; alpha >= 1; --alpha) {
    lv.digits_[alpha] = static_cast<int>(rest % base);
    rest /= base;
  }
  while (lv.digits_.size() > 1 && lv.digits_.back() == 0) lv.digits_.pop_back();
  return lv;
}

Level Level::expand(int base, const Rational& value, int n) {
  check_base(base);
  if (value < 0 || value > 1) throw DomainError("level value outside [0,1]");
  if (n < 0 || n > 30) throw DomainError("level depth bound out of range");
  const Rational scaled = value * Rational(ipow(base, n));
  if (boost::multiprecision::denominator(scaled) != 1)
    throw DomainError("value " + compact_string(value) + " is not representable at depth " +
                      std::to_string(n));
  return from_units(base, boost::multiprecision::numerator(scaled).convert_to<std::uint64_t>(), n);
}

std::uint64_t Level::units(int n) const {
  if (depth() > n) throw DomainError("level deeper than the requested unit");
  std::uint64_t u = 0;
  for (int alpha = 0; alpha <= n; ++alpha) u = u * base_ + static_cast<std::uint64_t>(digit(alpha));
  return u;
}

Rational Level::value() const {
  const int d = depth();
  return Rational(units(d), ipow(base_, d));
}

Level Level::truncated(int tau) const {
  Level lv = *this;
  if (tau < 0) tau = 0;
  if (static_cast<int>(lv.digits_.size()) > tau + 1) lv.digits_.resize(static_cast<std::size_t>(tau) + 1);
  while (lv.digits_.size() > 1 && lv.digits_.back() == 0) lv.digits_.pop_back();
  return lv;
}

std::string Level::to_string() const { return fraction_string(value()); }

std::strong_ordering Level::operator<=>(const Level& other) const {
  const std::size_t len = std::max(digits_.size(), other.digits_.size());
  for (std::size_t i = 0; i < len; ++i) {
    const int a = digit(static_cast<int>(i));
    const int b = other.digit(static_cast<int>(i));
    if (a != b) return a <=> b;
  }
  return base_ <=> other.base_;
}

}  // namespace esa
