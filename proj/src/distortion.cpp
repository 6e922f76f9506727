#include "esa/distortion.hpp"

#include "esa/diamond_embedding.hpp"
#include "esa/errors.hpp"

namespace esa {

DenseImages materialize(const EmbeddingTable& table) {
  DenseImages dense;
  dense.length = table.layout.total_length();
  dense.count = table.images.size();
  dense.data.assign(dense.length * dense.count, 0);
  for (std::size_t i = 0; i < dense.count; ++i) {
    std::int8_t* row = dense.data.data() + i * dense.length;
    for (const auto& r : table.images[i].runs()) {
      if (r.end() - 1 > dense.length) throw DomainError("image extends past the block range");
      if (r.value < -63 || r.value > 63) throw DomainError("image value outside the kernel range");
      std::fill(row + (r.start - 1), row + (r.end() - 1), static_cast<std::int8_t>(r.value));
    }
  }
  return dense;
}

PairNorms pairwise_norms(const DenseImages& dense, NormKind norm, kernels::Isa isa) {
  PairNorms out;
  out.norm = norm;
  out.count = dense.count;
  out.values.assign(dense.count * dense.count, 0);
  for (std::size_t u = 0; u < dense.count; ++u) {
    for (std::size_t v = u + 1; v < dense.count; ++v) {
      const std::int64_t value = norm == NormKind::l1 ? kernels::diff_l1(dense.row(u), dense.row(v), isa)
                                                      : kernels::diff_summing(dense.row(u), dense.row(v), isa);
      out.values[u * dense.count + v] = value;
      out.values[v * dense.count + u] = value;
    }
  }
  return out;
}

DistortionReport distortion_from_norms(const MetricTable& metric, const EmbeddingTable& table, const PairNorms& norms) {
  if (table.images.size() != metric.size() || norms.count != metric.size())
    throw DomainError("embedding table does not cover the metric's vertices");
  DistortionReport report;
  report.norm = norms.norm;
  report.scale = Rational(norm(norms.norm, table.top()));
  const std::uint64_t full = metric.diameter_units();
  // Ratios are value * full / d_units; compare by cross-multiplication.
  using Wide = __int128;
  Wide best_num = -1, best_den = 1, worst_num = -1, worst_den = 1;
  for (std::size_t u = 0; u < metric.size(); ++u) {
    for (std::size_t v = u + 1; v < metric.size(); ++v) {
      const Wide num = Wide(norms.at(u, v)) * Wide(full);
      const Wide den = metric.units(u, v);
      ++report.pairs;
      if (best_num < 0 || num * best_den > best_num * den) {
        best_num = num;
        best_den = den;
        report.worst_expansion.u = u;
        report.worst_expansion.v = v;
      }
      if (worst_num < 0 || num * worst_den < worst_num * den) {
        worst_num = num;
        worst_den = den;
        report.worst_contraction.u = u;
        report.worst_contraction.v = v;
      }
    }
  }
  if (report.pairs == 0) throw DomainError("distortion needs at least two vertices");
  auto to_rational = [](Wide num, Wide den) {
    return Rational(BigInt(static_cast<long long>(num)), BigInt(static_cast<long long>(den)));
  };
  report.lipschitz = to_rational(best_num, best_den);
  report.colipschitz = to_rational(worst_num, worst_den);
  report.worst_expansion.ratio = report.lipschitz;
  report.worst_contraction.ratio = report.colipschitz;
  if (report.colipschitz > 0) report.distortion = report.lipschitz / report.colipschitz;
  report.lipschitz_is_scale = report.lipschitz == report.scale;
  report.within_bound = report.colipschitz * 8 >= report.scale && report.colipschitz > 0;
  return report;
}

DistortionReport distortion_report(const MetricTable& metric, const EmbeddingTable& table, NormKind norm,
                                   kernels::Isa isa) {
  if (table.images.size() != metric.size()) throw DomainError("embedding table does not cover the metric's vertices");
  return distortion_from_norms(metric, table, pairwise_norms(materialize(table), norm, isa));
}

DistortionReport laakso_distortion_report(const MetricTable& metric, const EmbeddingTable& table, NormKind norm,
                                          kernels::Isa isa) {
  if (table.layout.family != Family::laakso) throw DomainError("expected a Laakso table");
  return distortion_report(metric, table, norm, isa);
}

CheckResult check_vertical_isometry(const MetricTable& metric, const EmbeddingTable& table, const PairNorms& norms) {
  CheckResult result;
  const std::int64_t scale = norm(norms.norm, table.top());
  const std::uint64_t full = metric.diameter_units();
  for (std::size_t u = 0; u < metric.size(); ++u) {
    for (std::size_t v = u + 1; v < metric.size(); ++v) {
      if (vertical_relation(metric, u, v) == Vertical::incomparable) continue;
      ++result.checked;
      if (static_cast<__int128>(norms.at(u, v)) * full != static_cast<__int128>(scale) * metric.units(u, v))
        result.fail(table.labels[u].to_string() + " - " + table.labels[v].to_string() + " is not isometric");
    }
  }
  return result;
}

CheckResult check_case_bounds(const GraphInstance& g, const MetricTable& metric, const EmbeddingTable& table,
                              const PairNorms& norms, std::vector<std::uint64_t>* counts) {
  CheckResult result;
  if (counts) counts->assign(6, 0);
  const std::int64_t scale = norm(norms.norm, table.top());
  const std::uint64_t full = metric.diameter_units();
  for (std::size_t u = 0; u < metric.size(); ++u) {
    for (std::size_t v = u + 1; v < metric.size(); ++v) {
      ++result.checked;
      const PairCase c = classify_diamond_pair(g.vertices[u], g.vertices[v]);
      if (counts) ++(*counts)[static_cast<std::size_t>(c)];
      const bool vertical_case = pair_case_constant(c) == 1;
      const bool vertical = vertical_relation(metric, u, v) != Vertical::incomparable;
      const std::string pair = g.vertices[u].to_string() + " - " + g.vertices[v].to_string();
      if (vertical_case != vertical) result.fail(pair + ": case " + pair_case_name(c) + " disagrees with the metric");
      // ratio >= scale / K  <=>  K * norm * full >= scale * d_units
      const __int128 lhs = static_cast<__int128>(pair_case_constant(c)) * norms.at(u, v) * full;
      const __int128 rhs = static_cast<__int128>(scale) * metric.units(u, v);
      if (lhs < rhs) result.fail(pair + ": ratio below the case bound");
    }
  }
  return result;
}

}  // namespace esa
