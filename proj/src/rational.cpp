#include "esa/rational.hpp"


#include "esa/errors.hpp"

namespace esa {

namespace mp = boost::multiprecision;

std::string fraction_string(const Rational& r) {
  return mp::numerator(r).str() + "/" + mp::denominator(r).str();
}

std::string compact_string(const Rational& r) {
  if (mp::denominator(r) == 1) return mp::numerator(r).str();
  return fraction_string(r);
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw ParseError("malformed rational: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("malformed rational: '" + std::string(whole) + "'");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  BigInt den = parse_integer(den_text, text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt floor_of(const Rational& r) {
  BigInt q = mp::numerator(r) / mp::denominator(r);  // truncates toward zero
  if (r < 0 && q * mp::denominator(r) != mp::numerator(r)) q -= 1;
  return q;
}

BigInt ceil_of(const Rational& r) {
  BigInt f = floor_of(r);
  return f == r ? f : BigInt(f + 1);
}

BigInt pow2(unsigned e) {
  BigInt one = 1;
  return one << e;
}

}  // namespace esa
