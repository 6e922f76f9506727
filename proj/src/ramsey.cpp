#include "esa/ramsey.hpp"

#include "esa/errors.hpp"

namespace esa {

namespace {

BigInt power(std::uint64_t base, std::uint64_t e) {
  BigInt out = 1;
  BigInt b = base;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace

// An end-homogeneous sequence v_1, ..., v_L (the color of v_a v_b depends
// only on a) of length L = r(n-2)+2 contains a monochromatic K_n by
// pigeonhole, and r^(L-1) vertices suffice to grow one greedily.
std::optional<BigInt> ramsey_graph_upper(std::uint64_t n, std::uint64_t r, std::uint64_t max_exponent) {
  if (r == 0) throw DomainError("at least one color is needed");
  if (n <= 2 || r == 1) return BigInt(n);
  const std::uint64_t e = r * (n - 2) + 1;
  if (e > max_exponent) return std::nullopt;
  return power(r, e);
}

// For triples the sequence must be end-homogeneous in the last element
// (the color of v_a v_b v_c depends only on a, b); its length m = R(n-1; r)+1
// suffices, and growing it greedily costs a factor r^(j-1) at step j.
std::optional<BigInt> ramsey_triple_upper(std::uint64_t n, std::uint64_t r, std::uint64_t max_exponent) {
  if (r == 0) throw DomainError("at least one color is needed");
  if (n <= 3 || r == 1) return BigInt(n);
  const auto graph = ramsey_graph_upper(n - 1, r, max_exponent);
  if (!graph || *graph > BigInt(max_exponent) * 4) return std::nullopt;
  const BigInt m1 = *graph;  // m - 1
  const BigInt e = m1 * (m1 - 1) / 2;
  if (e > BigInt(max_exponent)) return std::nullopt;
  return 2 * power(r, e.convert_to<std::uint64_t>());
}

RamseyBound ramsey_bound_from_square(const Rational& c_squared) {
  if (c_squared <= 1) throw PreconditionError("C must exceed 1");
  RamseyBound out;
  out.exponent = ceil_of(8 * c_squared);
  const std::string e = out.exponent.str();
  out.formula = "R_3(2^" + e + ", 3)";
  if (out.exponent <= 64) {
    const unsigned small = out.exponent.convert_to<unsigned>();
    out.s = pow2(small);
    out.formula_expanded = "R_3(" + out.s->str() + ",3)";
    if (small < 64) out.upper_bound = ramsey_triple_upper(std::uint64_t{1} << small, 3);
  }
  // R(s-1; 3) <= 3^(3s-8), so R_3(s, 3) <= 2 * 3^C(3^(3s-8), 2).
  out.upper_bound_expression = "2*3^binom(3^(3*s-8),2) with s = 2^" + e;
  return out;
}

RamseyBound ramsey_bound(const Rational& C) {
  if (C <= 1) throw PreconditionError("C must exceed 1");
  return ramsey_bound_from_square(C * C);
}

}  // namespace esa
