#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "esa/blocks.hpp"
#include "esa/graphs.hpp"

namespace esa {

struct LaaksoOptions {
  // Sign used for the empty branch label. The general construction fixes
  // +1; the L_1 warmup picture corresponds to -1. Both give the same norms.
  int empty_label_sign = 1;
  std::uint64_t max_blocks = kDefaultBlockBudget;
};

// Positive supports P(v, nu) built gadget by gadget in depth order. Every
// rewritten edge (w-, w+) records the sign tuple eps(w-, w+, nu) whose
// interval is the difference P(w+, nu) \ P(w-, nu).
class LaaksoEmbedding {
 public:
  // Throws DomainError for diamond instances, ResourceError for oversized M.
  explicit LaaksoEmbedding(const GraphInstance& g, const LaaksoOptions& options = {});

  const GraphInstance& graph() const { return graph_; }
  const BlockLayout& layout() const { return layout_; }
  // Relative to the block.
  const IntervalSet& support(std::size_t v, std::uint64_t nu) const { return supports_[v][nu]; }
  // Witness for an edge of some L_m (m < n) or the pair (bottom, top).
  // Throws DomainError for other pairs.
  const SignTuple& witness(std::size_t lower, std::size_t upper, std::uint64_t nu) const;
  SignVector image(std::size_t v) const;
  EmbeddingTable table() const;

 private:
  GraphInstance graph_;
  BlockLayout layout_;
  std::vector<std::vector<IntervalSet>> supports_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<SignTuple>> witnesses_;
};

// Image of a single vertex of L_{n,k}. Throws DomainError when the label is
// not a vertex, ResourceError for oversized M.
SignVector embed_laakso_vertex(int n, int k, const VertexLabel& v, const LaaksoOptions& options = {});

// Aligned intervals I_eps (eps of length <= depth) whose union is the given
// subset of [1, 2^depth], each taken as large as possible.
std::vector<SignTuple> minimal_tuple_cover(const IntervalSet& set, int depth);

struct CConditionReport {
  bool pass = true;
  std::uint64_t pairs_checked = 0;      // vertical pairs x blocks
  std::uint64_t witnesses_checked = 0;  // interior vertices x blocks
  std::uint64_t cardinality_checked = 0;
  std::string witness;

  void fail(const std::string& why) {
    if (pass) witness = why;
    pass = false;
  }
};

// Recomputes, from the supports alone, the tuple set A(v, u, nu) for every
// pair with u directly below v and checks (C1) disjoint intervals, (C2)
// disjointness from P(u), (C3) minimality and the reconstruction
// P(v) = P(u) + union of A; then (C4): for every interior w the set
// A(w+, w-, nu) is the single stored tuple; and |P(v, nu)| = 4^n lambda.
CConditionReport verify_c_conditions(const LaaksoEmbedding& emb, const MetricTable& metric);

// For every pair not joined by a direct vertical path there is a vertex w
// on a geodesic between them that is directly below both or directly
// above both. The extremal such w has last tetradic digit 1 (below) or 3
// (above) and d(u, v) <= 2 / 4^t(omega).
CheckResult check_meeting_vertices(const GraphInstance& g, const MetricTable& metric);

}  // namespace esa
