#pragma once

#include <cstdint>
#include <string>

#include "esa/blocks.hpp"
#include "esa/graphs.hpp"

namespace esa {

struct EmbedOptions {
  std::uint64_t max_blocks = kDefaultBlockBudget;
};

// Throws DomainError unless v is a vertex of D_{n,k}: dyadic level of
// depth at most n and a branch of length s(lambda) with entries in 1..k.
void check_diamond_label(int n, int k, const VertexLabel& v);

// Positive support P(nu), relative to the block, produced by the
// step-by-step construction (sets C_alpha and signs eps_alpha).
IntervalSet diamond_support(int n, const Rademacher& r, const VertexLabel& v, std::uint64_t nu);

// Image of v built from the step-by-step construction.
SignVector embed_vertex_inductive(int n, int k, const VertexLabel& v, const EmbedOptions& options = {});

// Image of v from the closed formula sum_alpha lambda_alpha h_theta. The
// bottom and the top are handled by their special images.
SignVector embed_vertex_formula(int n, int k, const VertexLabel& v, const EmbedOptions& options = {});

// Images of every vertex of a diamond graph, in the graph's vertex order.
// Throws ResourceError naming M when the layout exceeds the budget.
EmbeddingTable embed_all(const GraphInstance& g, const EmbedOptions& options = {});

// Image-table invariants shared by both families: bottom maps to 0, top to
// x_1, every block is 1_P - 1_Ref(P) with |P| = half * lambda.
CheckResult check_table_structure(const GraphInstance& g, const EmbeddingTable& table);

// P_u(nu) is contained in P_v(nu) whenever u lies directly below v.
CheckResult check_monotone_supports(const GraphInstance& g, const MetricTable& metric, const EmbeddingTable& table);

// For every edge and block the upper support gains exactly one coordinate.
CheckResult check_edge_law(const GraphInstance& g, const EmbeddingTable& table);

// Position of a vertex pair in the distortion analysis of diamonds.
enum class PairCase {
  endpoint,      // one of the vertices is the bottom or the top
  nested,        // B empty: one label extends the other
  same_branch,   // i_beta = j_beta, lambda_beta != mu_beta
  split_zero,    // i_beta != j_beta, lambda_beta = mu_beta = 0
  split_one,     // i_beta != j_beta, lambda_beta = mu_beta = 1
  split_mixed,   // i_beta != j_beta, lambda_beta != mu_beta
};

std::string pair_case_name(PairCase c);
// Multiplicative constant K of the lower bound proved for the case.
int pair_case_constant(PairCase c);
// Requires distinct diamond labels.
PairCase classify_diamond_pair(const VertexLabel& a, const VertexLabel& b);

}  // namespace esa
