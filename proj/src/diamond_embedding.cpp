#include "esa/diamond_embedding.hpp"

#include <algorithm>

#include "esa/errors.hpp"

namespace esa {

void check_diamond_label(int n, int k, const VertexLabel& v) {
  if (k < 2 || n < 0) throw DomainError("invalid diamond parameters");
  if (v.level.base() != 2) throw DomainError("diamond labels use dyadic levels");
  const int s = v.level.is_one() ? 0 : v.level.depth();
  if (s > n) throw DomainError("level " + v.level.to_string() + " is not a level of D_n");
  if (static_cast<int>(v.branch.size()) != s)
    throw DomainError("branch of " + v.to_string() + " must have length s(lambda)=" + std::to_string(s));
  for (int j : v.branch)
    if (j < 1 || j > k) throw DomainError("branch entry of " + v.to_string() + " outside 1..k");
}

IntervalSet diamond_support(int n, const Rademacher& r, const VertexLabel& v, std::uint64_t nu) {
  IntervalSet P;
  if (v.level.is_one()) {
    P.add(h_interval(n, {}));
    return P;
  }
  if (v.level.is_zero()) return P;
  const int s = v.level.depth();
  SignTuple eps;
  for (int alpha = 1; alpha <= s; ++alpha) {
    const std::span<const int> J(v.branch.data(), static_cast<std::size_t>(alpha));
    const int sign = r(J, nu);
    if (v.level.digit(alpha) == 1) {
      eps.push_back(sign);
      P.add(h_interval(n, eps));
      eps.back() = -sign;
      if (alpha == s) break;
    } else {
      eps.push_back(sign);
    }
  }
  return P;
}

SignVector embed_vertex_inductive(int n, int k, const VertexLabel& v, const EmbedOptions& options) {
  check_diamond_label(n, k, v);
  const BlockLayout layout = make_layout(Family::diamond, n, k, options.max_blocks);
  const Rademacher r(n, k);
  std::vector<IntervalSet> P(layout.block_count());
  for (std::uint64_t nu = 0; nu < layout.block_count(); ++nu) P[nu] = diamond_support(n, r, v, nu);
  return assemble_blocks(layout, P);
}

SignVector embed_vertex_formula(int n, int k, const VertexLabel& v, const EmbedOptions& options) {
  check_diamond_label(n, k, v);
  const BlockLayout layout = make_layout(Family::diamond, n, k, options.max_blocks);
  if (v.level.is_zero()) return {};
  if (v.level.is_one()) return top_image(layout);
  const Rademacher r(n, k);
  const int s = v.level.depth();
  const std::uint64_t L = layout.block_length;
  std::vector<std::int64_t> block(L);
  SignVector x;
  SignTuple theta;
  for (std::uint64_t nu = 0; nu < layout.block_count(); ++nu) {
    std::fill(block.begin(), block.end(), 0);
    for (int alpha = 1; alpha <= s; ++alpha) {
      if (v.level.digit(alpha) == 0) continue;
      theta.clear();
      for (int beta = 1; beta <= alpha; ++beta) {
        const int sign = r(std::span<const int>(v.branch.data(), static_cast<std::size_t>(beta)), nu);
        theta.push_back(beta < alpha && v.level.digit(beta) == 1 ? -sign : sign);
      }
      const SignVector h = h_vector(n, theta);
      for (const auto& run : h.runs())
        for (std::uint64_t i = run.start; i < run.end(); ++i) block[i - 1] += run.value;
    }
    for (std::uint64_t i = 0; i < L; ++i) x.append(layout.offset(nu) + i + 1, 1, block[i]);
  }
  return x;
}

EmbeddingTable embed_all(const GraphInstance& g, const EmbedOptions& options) {
  if (g.family != Family::diamond) throw DomainError("embed_all builds diamond tables; use LaaksoEmbedding");
  EmbeddingTable table;
  table.layout = make_layout(Family::diamond, g.n, g.k, options.max_blocks);
  table.labels = g.vertices;
  const Rademacher r(g.n, g.k);
  std::vector<IntervalSet> P(table.layout.block_count());
  table.images.reserve(g.vertices.size());
  for (const auto& v : g.vertices) {
    for (std::uint64_t nu = 0; nu < table.layout.block_count(); ++nu) P[nu] = diamond_support(g.n, r, v, nu);
    table.images.push_back(assemble_blocks(table.layout, P));
  }
  return table;
}

namespace {

std::vector<std::vector<IntervalSet>> all_supports(const EmbeddingTable& table, CheckResult& result) {
  std::vector<std::vector<IntervalSet>> supports(table.images.size());
  for (std::size_t i = 0; i < table.images.size(); ++i) {
    std::string why;
    if (!decompose_blocks(table.images[i], table.layout, supports[i], why))
      result.fail(table.labels[i].to_string() + ": " + why);
  }
  return supports;
}

}  // namespace

CheckResult check_table_structure(const GraphInstance& g, const EmbeddingTable& table) {
  CheckResult result;
  if (table.labels != g.vertices) {
    result.fail("table does not cover the graph's vertices");
    return result;
  }
  if (!table.images.front().is_zero()) result.fail("bottom image is not zero");
  if (!(table.top() == top_image(table.layout))) result.fail("top image differs from x_1");
  const auto supports = all_supports(table, result);
  if (!result.pass) return result;
  const std::uint64_t full = g.diameter_units();
  for (std::size_t i = 0; i < supports.size(); ++i) {
    const std::uint64_t lambda_units = g.vertices[i].level.units(g.n);
    // |P| = half * lambda = half * lambda_units / full.
    const std::uint64_t expected = table.layout.half() / full * lambda_units;
    for (std::uint64_t nu = 0; nu < supports[i].size(); ++nu) {
      ++result.checked;
      if (supports[i][nu].card() != expected)
        result.fail(g.vertices[i].to_string() + " block " + std::to_string(nu) + ": |P|=" +
                    std::to_string(supports[i][nu].card()) + ", expected " + std::to_string(expected));
    }
  }
  return result;
}

CheckResult check_monotone_supports(const GraphInstance& g, const MetricTable& metric, const EmbeddingTable& table) {
  CheckResult result;
  const auto supports = all_supports(table, result);
  if (!result.pass) return result;
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (u == v || vertical_relation(metric, u, v) != Vertical::below) continue;
      for (std::uint64_t nu = 0; nu < supports[u].size(); ++nu) {
        ++result.checked;
        if (!supports[u][nu].subset_of(supports[v][nu]))
          result.fail("P(" + g.vertices[u].to_string() + ") not inside P(" + g.vertices[v].to_string() +
                      ") in block " + std::to_string(nu));
      }
    }
  }
  return result;
}

CheckResult check_edge_law(const GraphInstance& g, const EmbeddingTable& table) {
  CheckResult result;
  const auto supports = all_supports(table, result);
  if (!result.pass) return result;
  for (const auto& [lo, hi] : g.edges) {
    for (std::uint64_t nu = 0; nu < supports[lo].size(); ++nu) {
      ++result.checked;
      const IntervalSet gained = supports[hi][nu].minus(supports[lo][nu]);
      if (!supports[lo][nu].subset_of(supports[hi][nu]) || gained.intervals().size() != 1 || gained.card() != 1)
        result.fail("edge " + g.vertices[lo].to_string() + " - " + g.vertices[hi].to_string() + " block " +
                    std::to_string(nu) + " does not gain exactly one coordinate");
    }
  }
  return result;
}

std::string pair_case_name(PairCase c) {
  switch (c) {
    case PairCase::endpoint: return "endpoint";
    case PairCase::nested: return "nested";
    case PairCase::same_branch: return "same_branch";
    case PairCase::split_zero: return "split_zero";
    case PairCase::split_one: return "split_one";
    default: return "split_mixed";
  }
}

int pair_case_constant(PairCase c) {
  switch (c) {
    case PairCase::endpoint:
    case PairCase::nested:
    case PairCase::same_branch: return 1;
    default: return 8;
  }
}

PairCase classify_diamond_pair(const VertexLabel& a, const VertexLabel& b) {
  if (a == b) throw DomainError("pair classification needs distinct vertices");
  auto is_end = [](const VertexLabel& v) { return v.level.is_zero() || v.level.is_one(); };
  if (is_end(a) || is_end(b)) return PairCase::endpoint;
  const int s = std::min(a.level.depth(), b.level.depth());
  for (int alpha = 1; alpha <= s; ++alpha) {
    const bool same_entry = a.branch[alpha - 1] == b.branch[alpha - 1];
    const bool same_digit = a.level.digit(alpha) == b.level.digit(alpha);
    if (same_entry && same_digit) continue;
    if (same_entry) return PairCase::same_branch;
    if (!same_digit) return PairCase::split_mixed;
    return a.level.digit(alpha) == 0 ? PairCase::split_zero : PairCase::split_one;
  }
  return PairCase::nested;
}

}  // namespace esa
