#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "esa/rational.hpp"

namespace esa {

// Upper bounds from the end-homogeneous sequence argument:
//   R(n; r) <= r^(r(n-2)+1)          (graphs, r colors)
//   R_3(n; r) <= 2 r^C(m-1, 2),  m = R(n-1; r) + 1   (3-uniform)
// Empty when the exponent exceeds max_exponent.
std::optional<BigInt> ramsey_graph_upper(std::uint64_t n, std::uint64_t r, std::uint64_t max_exponent = 100000);
std::optional<BigInt> ramsey_triple_upper(std::uint64_t n, std::uint64_t r, std::uint64_t max_exponent = 100000);

struct RamseyBound {
  // e = ceil(8 C^2) and s = 2^e.
  BigInt exponent;
  std::optional<BigInt> s;  // empty when e > 64
  // "R_3(2^e, 3)"
  std::string formula;
  // "R_3(s,3)" with s in decimal; empty when e > 64.
  std::string formula_expanded;
  // Symbolic upper bound on R_3(s,3).
  std::string upper_bound_expression;
  // Numeric upper bound, or empty ("overflow").
  std::optional<BigInt> upper_bound;
  // Always false: only an upper bound is known.
  bool exact = false;
};

// k(C) = R_3(2^ceil(8C^2), 3). Throws PreconditionError unless C > 1.
RamseyBound ramsey_bound(const Rational& C);
// Same from C^2, which allows irrational C such as sqrt(2).
RamseyBound ramsey_bound_from_square(const Rational& c_squared);

}  // namespace esa
