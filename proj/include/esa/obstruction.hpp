#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "esa/blocks.hpp"
#include "esa/distortion.hpp"
#include "esa/graphs.hpp"
#include "esa/sign_vector.hpp"

namespace esa {

// Rational-valued images of graph vertices plus an optional constant C.
struct RationalEmbedding {
  std::vector<VertexLabel> labels;
  std::vector<RationalVector> images;
  std::optional<Rational> C;
};

// f = x / ||x_1||_1 for a module table, so that ||f(u) - f(v)||_1 <= d(u, v)
// holds with equality on vertical pairs.
RationalEmbedding scaled_factorization_images(const EmbeddingTable& table);

struct FactorizationResult {
  // ||f(u) - f(v)||_1 <= d(u, v) for every pair.
  bool l1_side = true;
  // No pair has ||f(u) - f(v)||_s = 0.
  bool bounded = true;
  // Infimum C* of the constants for which d < C ||f(u) - f(v)||_s holds,
  // i.e. max d / ||f(u) - f(v)||_s. Every C > C* passes. Meaningful only
  // when bounded.
  Rational threshold;
  std::size_t worst_u = 0;
  std::size_t worst_v = 0;
  // Verdict at the supplied C (false when no C was supplied).
  bool pass = false;
  std::string witness;
};

// Images must follow the metric's vertex order.
FactorizationResult check_factorization(const std::vector<RationalVector>& images, const MetricTable& metric,
                                        const std::optional<Rational>& C = std::nullopt);
// Maps labels to the graph's vertices first; DomainError on missing ones.
FactorizationResult check_factorization(const RationalEmbedding& f, const GraphInstance& g, const MetricTable& metric);
// Same verdict for x / ||x_1||_1 computed on the integer images directly.
FactorizationResult check_factorization(const EmbeddingTable& table, const MetricTable& metric,
                                        const std::optional<Rational>& C = std::nullopt);

struct MidpointReport {
  bool midpoint = true;   // (1-eta)/2 ||x_0||_1 <= ||x_i||_1 <= (1+eta)/2 ||x_0||_1
  bool midpoint2 = true;  // same for ||x_0 - x_i||_1
  bool far = true;        // ||x_i-x_j||_s > ||x_i-x_j||_1 / C >= ||x_0||_1 / C^2
  std::string witness;
  bool pass() const { return midpoint && midpoint2 && far; }
};

// Throws DomainError when fewer than two x_i are given, PreconditionError
// for x_0 = 0, eta outside (0,1) or C <= 1.
MidpointReport check_midpoint_family(const RationalVector& x0, const std::vector<RationalVector>& xs, const Rational& eta,
                                     const Rational& C);

// Normal-form family: z_1..z_k supported in {1..N}, stored densely.
struct ZFamily {
  std::uint64_t N = 0;
  Rational alpha;
  std::vector<std::vector<Rational>> z;  // z[i][m-1]

  std::size_t k() const { return z.size(); }
  Rational alphaN() const { return alpha * Rational(N); }
};

struct ZFamilyCheck {
  bool suppz = true;
  bool zdiff = true;
  bool lfarz = true;
  bool alphaN = true;
  std::string witness;
  bool pass() const { return suppz && zdiff && lfarz && alphaN; }
};

ZFamilyCheck validate_zfamily(const ZFamily& z);

struct ReductionResult {
  ZFamily family;
  // b_0 = 0 < b_1 < ... < b_p: coordinate m of x_0 is spread over
  // (b_{m-1}, b_m].
  std::vector<std::uint64_t> stretch;
  // max_i ||T x_i - z_i||_1 / ||T x_0||_1 actually achieved.
  Rational eta;
};

// Stretching operator T built from the coefficients of x_0.
RationalVector stretch_operator(const std::vector<std::uint64_t>& b, const RationalVector& y);

// Normal-form reduction with alpha = 1/(2C^2). Throws PreconditionError
// when x_0 has non-integer coefficients, ||x_0||_1 < 4C^2, C <= 1 or fewer
// than two x_i; ReductionError with the failing tag when an output
// condition (isometry, suppz, zdiff, lfarz, alphaN) does not hold.
ReductionResult reduce_family(const RationalVector& x0, const std::vector<RationalVector>& xs, const Rational& C);

// Inputs x_0, x_1..x_k whose reduction is known in advance: the columns of
// a valid family are grouped into stretched coordinates of x_0, zero
// coordinates are inserted, and the x_i are perturbed on the sets B, C and
// D. C is a rational constant with alpha N = N / (2C^2) between 2 and the
// smallest summing distance, so the expected output keeps the same z
// vectors with alpha = 1/(2C^2). Throws DomainError when z mixes signs in a
// column or no such C with denominator up to 1000 exists.
struct ReductionInput {
  RationalVector x0;
  std::vector<RationalVector> xs;
  Rational C;
  Rational eta;
  std::vector<std::vector<Rational>> z;
};

ReductionInput synthesize_reduction_input(const ZFamily& z, std::mt19937_64& rng);

// Smallest r with alpha N <= |sum_{m<=r} (z_im - z_jm)|; indices are
// 1-based. Throws DomainError when i == j, an index is out of range, no
// such r exists or the prefix at r is not below alpha N + 1.
std::uint64_t r_index(const ZFamily& z, std::size_t i, std::size_t j);

// Symmetric table of witness indices with 1-based access.
struct RTable {
  std::size_t k = 0;
  Rational alphaN;
  std::vector<std::uint64_t> r;  // r[(i-1)*k + (j-1)], zero on the diagonal

  std::uint64_t at(std::size_t i, std::size_t j) const { return r[(i - 1) * k + (j - 1)]; }
  void set(std::size_t i, std::size_t j, std::uint64_t value) {
    r[(i - 1) * k + (j - 1)] = value;
    r[(j - 1) * k + (i - 1)] = value;
  }
};

RTable r_table(const ZFamily& z);
RTable make_rtable(std::size_t k, const Rational& alphaN);

enum class TripleColor { red, blue, green };
std::string color_name(TripleColor c);

TripleColor color_from_indices(std::uint64_t rij, std::uint64_t ril, std::uint64_t rjl);
// Requires i < j < l (1-based).
TripleColor color_triple(const RTable& t, std::size_t i, std::size_t j, std::size_t l);
TripleColor color_triple(const ZFamily& z, std::size_t i, std::size_t j, std::size_t l);

struct SeparationResult {
  bool pass = false;
  std::uint64_t gap = 0;  // max - min of the three indices
  Rational required;      // (alpha N - 1) / 2
};

// Pairwise distinct indices; order does not matter.
SeparationResult verify_triple_separation(const RTable& t, std::size_t i, std::size_t j, std::size_t l);
SeparationResult verify_triple_separation(const ZFamily& z, std::size_t i, std::size_t j, std::size_t l);

struct ChainReport {
  bool chain = true;      // the growth inequalities
  bool size = true;       // |B| within floor(4/alpha) or 2^ceil(4/alpha)
  std::uint64_t inequalities = 0;
  std::string witness;    // "(b_q,b_t)" of the first failure
  bool pass() const { return chain && size; }
};

// B lists 1-based indices in increasing order. Throws PreconditionError
// when some triple of B has another color. `alpha` is used for the size
// bound only.
ChainReport monochromatic_chain_check(const RTable& t, std::span<const std::size_t> B, TripleColor color,
                                      const Rational& alpha);

// Random family satisfying zdiff and lfarz with alpha N >= 2: every
// coordinate picks a base b in {-1, 0} and each z_im in {b, b+1/2, b+1}.
ZFamily random_zfamily(std::mt19937_64& rng, std::uint64_t max_N, std::size_t min_k, std::size_t max_k);

}  // namespace esa
