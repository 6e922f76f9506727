#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esa/check_result.hpp"
#include "esa/level.hpp"
#include "esa/rational.hpp"

namespace esa {

enum class Family { diamond, laakso };

std::string family_name(Family f);
// Throws DomainError for anything other than "diamond" / "laakso".
Family parse_family(std::string_view name);
// 2 for diamonds, 4 for Laakso graphs.
int family_base(Family f);

// (level, branch tuple). Ordered by level, then lexicographically by branch.
struct VertexLabel {
  Level level;
  std::vector<int> branch;

  std::strong_ordering operator<=>(const VertexLabel& other) const;
  bool operator==(const VertexLabel& other) const = default;

  // "13/16;1,2,3,4"; the bottom vertex prints as "0/1;".
  std::string to_string() const;
};

// Inverse of VertexLabel::to_string for the given base. Throws ParseError.
VertexLabel parse_label(std::string_view text, int base);

// The vertices created when one edge (lower, upper) is rewritten at a given
// recursion depth. For diamonds `inner` holds the k midpoints; for Laakso
// graphs it holds a, b_1..b_k, c in level order.
struct Gadget {
  std::size_t lower = 0;
  std::size_t upper = 0;
  int depth = 0;
  std::vector<std::size_t> inner;
};

struct GraphInstance {
  Family family = Family::diamond;
  int n = 0;
  int k = 2;
  // Canonical order: level, then branch.
  std::vector<VertexLabel> vertices;
  // (lower, upper) vertex ids, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // Rewriting history in depth order.
  std::vector<Gadget> gadgets;
  // Endpoints (lower, upper) of the edge whose rewriting created the vertex;
  // empty for the bottom and the top.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent;

  int base() const { return family_base(family); }
  // Edge weight 2^-n or 4^-n.
  Rational unit() const;
  // base^n, the bottom-top distance measured in units.
  std::uint64_t diameter_units() const;
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return vertices.size() - 1; }
  std::optional<std::size_t> find(const VertexLabel& label) const;
  // Throws DomainError when the label is not a vertex.
  std::size_t index_of(const VertexLabel& label) const;
  std::vector<std::vector<std::size_t>> adjacency() const;
};

// Builds D_{n,k} or L_{n,k} by edge rewriting with ascending branch index.
// Throws DomainError for k < 2 or n < 0, ResourceError for oversized graphs.
GraphInstance build_graph(Family family, int n, int k);

// Exact shortest-path metric, stored as integers in units of base^-n.
class MetricTable {
 public:
  explicit MetricTable(const GraphInstance& g);

  std::size_t size() const { return n_vertices_; }
  std::uint32_t units(std::size_t u, std::size_t v) const { return d_[u * n_vertices_ + v]; }
  Rational distance(std::size_t u, std::size_t v) const { return Rational(units(u, v)) * unit_; }
  const Rational& unit() const { return unit_; }
  std::uint64_t diameter_units() const { return diameter_units_; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

 private:
  std::size_t n_vertices_ = 0;
  std::vector<std::uint32_t> d_;
  Rational unit_;
  std::uint64_t diameter_units_ = 1;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

MetricTable all_pairs_metric(const GraphInstance& g);

// Relation of u to v: below means a direct vertical path (a piece of some
// bottom-top geodesic) runs from u up to v.
enum class Vertical { above, below, incomparable };
std::string vertical_name(Vertical v);
// Throws DomainError for u == v.
Vertical vertical_relation(const MetricTable& metric, std::size_t u, std::size_t v);

// Bottom and top of the subdiamond Sigma_tau(v): levels R_tau(lambda) and
// R_tau(lambda) + 2^-tau with the matching initial segments of the branch.
// Throws DomainError for lambda = 1, tau outside [0, s(lambda)] or a
// non-dyadic label.
std::pair<VertexLabel, VertexLabel> subdiamond(const VertexLabel& v, int tau);

// (v-, v+) for an interior Laakso vertex. Throws DomainError for the top,
// the bottom, or a diamond instance.
std::pair<std::size_t, std::size_t> laakso_vplus_vminus(const GraphInstance& g, std::size_t v);

// For every interior Laakso vertex: v+ and v- sit at the levels given by
// the tetradic digit formulas, have shorter expansions, and every geodesic
// from v to the top (bottom) passes through v+ (v-), which is tested by
// deleting v+ (v-) and observing a strictly longer distance.
CheckResult check_laakso_uniqueness(const GraphInstance& g, const MetricTable& metric);

}  // namespace esa
