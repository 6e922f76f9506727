#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "esa/blocks.hpp"
#include "esa/graphs.hpp"
#include "esa/kernels.hpp"

namespace esa {

// Images expanded to int8 rows over the whole block range.
struct DenseImages {
  std::uint64_t length = 0;
  std::size_t count = 0;
  std::vector<std::int8_t> data;

  std::span<const std::int8_t> row(std::size_t i) const { return {data.data() + i * length, length}; }
};

DenseImages materialize(const EmbeddingTable& table);

// Symmetric matrix of ||x_u - x_v|| for every vertex pair.
struct PairNorms {
  NormKind norm = NormKind::l1;
  std::size_t count = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(std::size_t u, std::size_t v) const { return values[u * count + v]; }
};

PairNorms pairwise_norms(const DenseImages& dense, NormKind norm, kernels::Isa isa = kernels::best_isa());

struct PairRatio {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational ratio;
};

struct DistortionReport {
  NormKind norm = NormKind::l1;
  // ||x_1||, the norm of the top image.
  Rational scale;
  // max and min over pairs of ||x_u - x_v|| / d(u, v).
  Rational lipschitz;
  Rational colipschitz;
  Rational distortion;
  PairRatio worst_expansion;
  PairRatio worst_contraction;
  std::uint64_t pairs = 0;
  // lipschitz == scale exactly.
  bool lipschitz_is_scale = false;
  // colipschitz >= scale / 8.
  bool within_bound = false;

  bool pass() const { return lipschitz_is_scale && within_bound; }
};

// Exact sweep over all unordered pairs. Throws DomainError when the table
// and the metric disagree on the vertex count.
DistortionReport distortion_report(const MetricTable& metric, const EmbeddingTable& table, NormKind norm,
                                   kernels::Isa isa = kernels::best_isa());
DistortionReport distortion_from_norms(const MetricTable& metric, const EmbeddingTable& table, const PairNorms& norms);

// Same sweep for Laakso tables; the pair cases of the Laakso analysis are
// checked separately by check_meeting_vertices.
DistortionReport laakso_distortion_report(const MetricTable& metric, const EmbeddingTable& table, NormKind norm,
                                          kernels::Isa isa = kernels::best_isa());

// ||x_u - x_v|| = ||x_1|| d(u, v) for every pair joined by a direct
// vertical path.
CheckResult check_vertical_isometry(const MetricTable& metric, const EmbeddingTable& table, const PairNorms& norms);

// Every pair falls in exactly one case of the diamond analysis, the case
// agrees with the metric notion of being vertical, and the measured ratio
// respects the constant proved for that case. `counts` receives the number
// of pairs per case (indexed by PairCase).
CheckResult check_case_bounds(const GraphInstance& g, const MetricTable& metric, const EmbeddingTable& table,
                              const PairNorms& norms, std::vector<std::uint64_t>* counts = nullptr);

}  // namespace esa
