#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "esa/check_result.hpp"
#include "esa/graphs.hpp"
#include "esa/sign_vector.hpp"

// Shared block layout, h-vectors, Rademacher signs and the image table used
// by both the diamond and the Laakso embedding.

namespace esa {

constexpr std::uint64_t kDefaultBlockBudget = std::uint64_t{1} << 20;

// M = k + k^2 + ... + k^n. Saturates at UINT64_MAX on overflow.
std::uint64_t branch_label_count(int n, int k);

struct BlockLayout {
  Family family = Family::diamond;
  int n = 0;
  int k = 2;
  std::uint64_t M = 0;
  // Length bound for sign tuples: n for diamonds, 2n for Laakso graphs.
  int depth = 0;
  // 2^(depth+1).
  std::uint64_t block_length = 2;

  std::uint64_t half() const { return block_length / 2; }
  std::uint64_t block_count() const { return std::uint64_t{1} << M; }
  std::uint64_t total_length() const { return block_length * block_count(); }
  // Coordinate just before block nu, so block coordinate j sits at offset + j.
  std::uint64_t offset(std::uint64_t nu) const { return nu * block_length; }
};

// Throws ResourceError naming M when 2^M exceeds max_blocks.
BlockLayout make_layout(Family family, int n, int k, std::uint64_t max_blocks = kDefaultBlockBudget);

// Closed interval of 1-based coordinates.
struct Interval {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::uint64_t card() const { return hi - lo + 1; }
  bool operator==(const Interval&) const = default;
};

using SignTuple = std::vector<int>;

std::string tuple_string(std::span<const int> eps);

// I_eps inside [1, 2^depth]; + selects the upper half, - the lower half.
// Throws DomainError when eps is longer than depth or has non-sign entries.
Interval h_interval(int depth, std::span<const int> eps);

// 1 on I_eps, -1 on its mirror image in [1, 2^(depth+1)].
SignVector h_vector(int depth, std::span<const int> eps);

// Sorted, disjoint, non-touching intervals.
class IntervalSet {
 public:
  IntervalSet() = default;
  // Adds an interval disjoint from the current members.
  void add(Interval iv);
  const std::vector<Interval>& intervals() const { return items_; }
  std::uint64_t card() const;
  bool contains(const Interval& iv) const;
  bool intersects(const Interval& iv) const;
  bool subset_of(const IntervalSet& other) const;
  IntervalSet minus(const IntervalSet& other) const;
  bool empty() const { return items_.empty(); }
  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> items_;
};

// Rademacher-type signs r_A on {0, ..., 2^M - 1} indexed by the canonical
// position a(A) of a branch label (length first, then lexicographic).
class Rademacher {
 public:
  Rademacher(int n, int k);
  std::uint64_t M() const { return M_; }
  // a(A) in 1..M. Throws DomainError for labels outside the label set.
  std::uint64_t position(std::span<const int> label) const;
  // +1 when bit M - a(A) of nu is clear; the empty label gives +1.
  int operator()(std::span<const int> label, std::uint64_t nu) const;

 private:
  int n_;
  int k_;
  std::uint64_t M_;
};

// Image of the top vertex: one h-vector per block.
SignVector top_image(const BlockLayout& layout);

// Assembles 1_P - 1_Ref(P) block by block from positive supports given
// relative to each block.
SignVector assemble_blocks(const BlockLayout& layout, const std::vector<IntervalSet>& positive);

// Recovers the positive support of every block, checking that the vector
// is {0,+1,-1}-valued, lives inside the blocks, keeps +1 in the first half
// of each block and -1 on the exact mirror. Returns false with a reason
// otherwise.
bool decompose_blocks(const SignVector& x, const BlockLayout& layout, std::vector<IntervalSet>& positive,
                      std::string& why);

struct EmbeddingTable {
  BlockLayout layout;
  // Same order as the vertices of the graph the table was built from.
  std::vector<VertexLabel> labels;
  std::vector<SignVector> images;

  std::size_t index_of(const VertexLabel& label) const;
  const SignVector& image(const VertexLabel& label) const { return images[index_of(label)]; }
  // Image of the vertex at level 1.
  const SignVector& top() const;
};

}  // namespace esa
