#include "esa/blocks.hpp"

#include <algorithm>
#include <limits>

#include "esa/errors.hpp"

namespace esa {

std::uint64_t branch_label_count(int n, int k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0, power = 1;
  for (int i = 1; i <= n; ++i) {
    if (power > kMax / static_cast<std::uint64_t>(k)) return kMax;
    power *= static_cast<std::uint64_t>(k);
    if (total > kMax - power) return kMax;
    total += power;
  }
  return total;
}

BlockLayout make_layout(Family family, int n, int k, std::uint64_t max_blocks) {
  if (k < 2) throw DomainError("branching k must be at least 2");
  if (n < 0) throw DomainError("depth n must be nonnegative");
  BlockLayout layout;
  layout.family = family;
  layout.n = n;
  layout.k = k;
  layout.M = branch_label_count(n, k);
  layout.depth = family == Family::diamond ? n : 2 * n;
  const std::string m_text = layout.M == std::numeric_limits<std::uint64_t>::max() ? "overflow" : std::to_string(layout.M);
  if (layout.M >= 40 || (std::uint64_t{1} << layout.M) > max_blocks)
    throw ResourceError("block count 2^M exceeds the budget of " + std::to_string(max_blocks) + " blocks (M=" +
                        m_text + ")");
  if (layout.depth > 40) throw ResourceError("block length 2^" + std::to_string(layout.depth + 1) + " is too long");
  layout.block_length = std::uint64_t{2} << layout.depth;
  return layout;
}

std::string tuple_string(std::span<const int> eps) {
  std::string s = "(";
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i) s += ",";
    s += eps[i] > 0 ? "+" : "-";
  }
  return s + ")";
}

Interval h_interval(int depth, std::span<const int> eps) {
  if (depth < 0) throw DomainError("negative depth");
  if (static_cast<int>(eps.size()) > depth)
    throw DomainError("sign tuple of length " + std::to_string(eps.size()) + " exceeds depth " + std::to_string(depth));
  std::uint64_t lo = 1;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (eps[i] != 1 && eps[i] != -1) throw DomainError("sign tuple entries must be +1 or -1");
    if (eps[i] > 0) lo += std::uint64_t{1} << (depth - 1 - static_cast<int>(i));
  }
  const std::uint64_t len = std::uint64_t{1} << (depth - static_cast<int>(eps.size()));
  return Interval{lo, lo + len - 1};
}

SignVector h_vector(int depth, std::span<const int> eps) {
  const Interval iv = h_interval(depth, eps);
  const std::uint64_t full = std::uint64_t{2} << depth;
  SignVector v;
  v.append(iv.lo, iv.card(), 1);
  v.append(full - iv.hi + 1, iv.card(), -1);
  return v;
}

void IntervalSet::add(Interval iv) {
  if (iv.lo > iv.hi) throw DomainError("empty interval");
  auto it = std::lower_bound(items_.begin(), items_.end(), iv,
                             [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  if (it != items_.end() && it->lo <= iv.hi) throw DomainError("interval overlaps the set");
  if (it != items_.begin() && std::prev(it)->hi >= iv.lo) throw DomainError("interval overlaps the set");
  it = items_.insert(it, iv);
  if (std::next(it) != items_.end() && std::next(it)->lo == it->hi + 1) {
    it->hi = std::next(it)->hi;
    items_.erase(std::next(it));
  }
  if (it != items_.begin() && std::prev(it)->hi + 1 == it->lo) {
    std::prev(it)->hi = it->hi;
    items_.erase(it);
  }
}

std::uint64_t IntervalSet::card() const {
  std::uint64_t c = 0;
  for (const auto& iv : items_) c += iv.card();
  return c;
}

bool IntervalSet::contains(const Interval& iv) const {
  auto it = std::upper_bound(items_.begin(), items_.end(), iv.lo,
                             [](std::uint64_t x, const Interval& a) { return x < a.lo; });
  if (it == items_.begin()) return false;
  --it;
  return it->lo <= iv.lo && iv.hi <= it->hi;
}

bool IntervalSet::intersects(const Interval& iv) const {
  for (const auto& a : items_)
    if (a.lo <= iv.hi && iv.lo <= a.hi) return true;
  return false;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  return std::all_of(items_.begin(), items_.end(), [&](const Interval& iv) { return other.contains(iv); });
}

IntervalSet IntervalSet::minus(const IntervalSet& other) const {
  IntervalSet out;
  for (const auto& iv : items_) {
    std::uint64_t cursor = iv.lo;
    for (const auto& cut : other.items_) {
      if (cut.hi < cursor || cut.lo > iv.hi) continue;
      if (cut.lo > cursor) out.items_.push_back(Interval{cursor, cut.lo - 1});
      cursor = cut.hi + 1;
      if (cursor > iv.hi) break;
    }
    if (cursor <= iv.hi) out.items_.push_back(Interval{cursor, iv.hi});
  }
  return out;
}

Rademacher::Rademacher(int n, int k) : n_(n), k_(k), M_(branch_label_count(n, k)) {
  if (M_ >= 64) throw ResourceError("Rademacher index needs M < 64 (M=" + std::to_string(M_) + ")");
}

std::uint64_t Rademacher::position(std::span<const int> label) const {
  const int len = static_cast<int>(label.size());
  if (len < 1 || len > n_) throw DomainError("branch label length outside 1..n");
  std::uint64_t pos = branch_label_count(len - 1, k_);
  std::uint64_t offset = 0;
  for (int j : label) {
    if (j < 1 || j > k_) throw DomainError("branch label entry outside 1..k");
    offset = offset * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(j - 1);
  }
  return pos + offset + 1;
}

int Rademacher::operator()(std::span<const int> label, std::uint64_t nu) const {
  if (nu >> M_) throw DomainError("block index out of range");
  if (label.empty()) return 1;
  const std::uint64_t bit = M_ - position(label);
  return (nu >> bit) & 1 ? -1 : 1;
}

SignVector top_image(const BlockLayout& layout) {
  SignVector x;
  const std::uint64_t h = layout.half();
  for (std::uint64_t nu = 0; nu < layout.block_count(); ++nu) {
    x.append(layout.offset(nu) + 1, h, 1);
    x.append(layout.offset(nu) + h + 1, h, -1);
  }
  return x;
}

SignVector assemble_blocks(const BlockLayout& layout, const std::vector<IntervalSet>& positive) {
  if (positive.size() != layout.block_count()) throw DomainError("one support per block expected");
  SignVector x;
  const std::uint64_t L = layout.block_length;
  for (std::uint64_t nu = 0; nu < positive.size(); ++nu) {
    const std::uint64_t off = layout.offset(nu);
    const auto& items = positive[nu].intervals();
    for (const auto& iv : items) x.append(off + iv.lo, iv.card(), 1);
    for (auto it = items.rbegin(); it != items.rend(); ++it) x.append(off + L - it->hi + 1, it->card(), -1);
  }
  return x;
}

bool decompose_blocks(const SignVector& x, const BlockLayout& layout, std::vector<IntervalSet>& positive,
                      std::string& why) {
  const std::uint64_t L = layout.block_length, h = layout.half();
  positive.assign(layout.block_count(), IntervalSet{});
  std::vector<std::vector<Interval>> negative(layout.block_count());
  for (const auto& r : x.runs()) {
    const std::uint64_t nu = (r.start - 1) / L;
    if (nu >= layout.block_count()) {
      why = "support beyond the last block at coordinate " + std::to_string(r.start);
      return false;
    }
    const std::uint64_t lo = r.start - layout.offset(nu), hi = lo + r.length - 1;
    if (hi > L) {
      why = "run crosses the end of block " + std::to_string(nu);
      return false;
    }
    if (r.value == 1) {
      if (hi > h) {
        why = "+1 outside the first half of block " + std::to_string(nu);
        return false;
      }
      positive[nu].add(Interval{lo, hi});
    } else if (r.value == -1) {
      negative[nu].push_back(Interval{L - hi + 1, L - lo + 1});
    } else {
      why = "value " + std::to_string(r.value) + " outside {0,+1,-1}";
      return false;
    }
  }
  for (std::uint64_t nu = 0; nu < layout.block_count(); ++nu) {
    IntervalSet mirrored;
    for (const auto& iv : negative[nu]) mirrored.add(iv);
    if (!(mirrored == positive[nu])) {
      why = "negative part of block " + std::to_string(nu) + " is not the mirrored positive part";
      return false;
    }
  }
  return true;
}

std::size_t EmbeddingTable::index_of(const VertexLabel& label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || !(*it == label)) throw DomainError("no image for vertex " + label.to_string());
  return static_cast<std::size_t>(it - labels.begin());
}

const SignVector& EmbeddingTable::top() const {
  if (images.empty()) throw DomainError("empty embedding table");
  return images.back();
}

}  // namespace esa
