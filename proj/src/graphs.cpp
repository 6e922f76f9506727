#include "esa/graphs.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "esa/errors.hpp"

namespace esa {

std::string family_name(Family f) { return f == Family::diamond ? "diamond" : "laakso"; }

Family parse_family(std::string_view name) {
  if (name == "diamond") return Family::diamond;
  if (name == "laakso") return Family::laakso;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

int family_base(Family f) { return f == Family::diamond ? 2 : 4; }

std::strong_ordering VertexLabel::operator<=>(const VertexLabel& other) const {
  if (auto c = level <=> other.level; c != 0) return c;
  return std::lexicographical_compare_three_way(branch.begin(), branch.end(), other.branch.begin(),
                                                other.branch.end());
}

std::string VertexLabel::to_string() const {
  std::string out = level.to_string() + ";";
  for (std::size_t i = 0; i < branch.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(branch[i]);
  }
  return out;
}

VertexLabel parse_label(std::string_view text, int base) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("label without ';': '" + std::string(text) + "'");
  VertexLabel label;
  const Rational value = parse_rational(text.substr(0, semi));
  try {
    label.level = Level::expand(base, value, 30);
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad label level: ") + e.what());
  }
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const Rational j = parse_rational(item);
    if (boost::multiprecision::denominator(j) != 1 || j < 1 || j > 1000000)
      throw ParseError("bad branch entry in label '" + std::string(text) + "'");
    label.branch.push_back(boost::multiprecision::numerator(j).convert_to<int>());
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return label;
}

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

constexpr std::uint64_t kMaxEdges = std::uint64_t{1} << 22;

// The longer of two labels, one of which must be an initial segment of the
// other.
std::vector<int> longer_label(const std::vector<int>& a, const std::vector<int>& b) {
  const auto& shorter = a.size() <= b.size() ? a : b;
  const auto& longer = a.size() <= b.size() ? b : a;
  if (!std::equal(shorter.begin(), shorter.end(), longer.begin()))
    throw std::logic_error("endpoint labels are not nested");
  return longer;
}

struct Draft {
  std::vector<std::uint64_t> units;
  std::vector<std::vector<int>> branch;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent;

  std::size_t add(std::uint64_t u, std::vector<int> b, std::optional<std::pair<std::size_t, std::size_t>> p) {
    units.push_back(u);
    branch.push_back(std::move(b));
    parent.push_back(p);
    return units.size() - 1;
  }
};

}  // namespace

Rational GraphInstance::unit() const { return Rational(1, diameter_units()); }

std::uint64_t GraphInstance::diameter_units() const { return ipow(static_cast<std::uint64_t>(base()), n); }

std::optional<std::size_t> GraphInstance::find(const VertexLabel& label) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), label);
  if (it == vertices.end() || !(*it == label)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

std::size_t GraphInstance::index_of(const VertexLabel& label) const {
  if (auto id = find(label)) return *id;
  throw DomainError("vertex " + label.to_string() + " is not in " + family_name(family) + "(" +
                    std::to_string(n) + "," + std::to_string(k) + ")");
}

std::vector<std::vector<std::size_t>> GraphInstance::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

GraphInstance build_graph(Family family, int n, int k) {
  if (k < 2) throw DomainError("branching k must be at least 2");
  if (n < 0) throw DomainError("depth n must be nonnegative");
  const std::uint64_t growth = family == Family::diamond ? 2ull * k : 2ull * k + 2;
  std::uint64_t edge_count = 1;
  for (int i = 0; i < n; ++i) {
    edge_count *= growth;
    if (edge_count > kMaxEdges)
      throw ResourceError(family_name(family) + "(" + std::to_string(n) + "," + std::to_string(k) +
                          ") has more than 2^22 edges");
  }

  const int base = family_base(family);
  const std::uint64_t full = ipow(static_cast<std::uint64_t>(base), n);
  Draft draft;
  draft.add(0, {}, std::nullopt);
  draft.add(full, {}, std::nullopt);
  std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}};
  std::vector<Gadget> gadgets;

  for (int depth = 1; depth <= n; ++depth) {
    std::vector<std::pair<std::size_t, std::size_t>> next;
    next.reserve(edges.size() * growth);
    for (const auto& [lo, hi] : edges) {
      const std::uint64_t span = draft.units[hi] - draft.units[lo];
      const std::vector<int> star = longer_label(draft.branch[lo], draft.branch[hi]);
      const std::pair<std::size_t, std::size_t> par{lo, hi};
      Gadget gadget{lo, hi, depth, {}};
      if (family == Family::diamond) {
        for (int j = 1; j <= k; ++j) {
          std::vector<int> b = star;
          b.push_back(j);
          const std::size_t mid = draft.add(draft.units[lo] + span / 2, std::move(b), par);
          gadget.inner.push_back(mid);
          next.emplace_back(lo, mid);
          next.emplace_back(mid, hi);
        }
      } else {
        const std::size_t a = draft.add(draft.units[lo] + span / 4, star, par);
        gadget.inner.push_back(a);
        std::vector<std::size_t> bs;
        for (int j = 1; j <= k; ++j) {
          std::vector<int> b = star;
          b.push_back(j);
          bs.push_back(draft.add(draft.units[lo] + span / 2, std::move(b), par));
        }
        const std::size_t c = draft.add(draft.units[lo] + 3 * (span / 4), star, par);
        gadget.inner.insert(gadget.inner.end(), bs.begin(), bs.end());
        gadget.inner.push_back(c);
        next.emplace_back(lo, a);
        for (std::size_t b : bs) {
          next.emplace_back(a, b);
          next.emplace_back(b, c);
        }
        next.emplace_back(c, hi);
      }
      gadgets.push_back(std::move(gadget));
    }
    edges = std::move(next);
  }

  // Canonical renumbering.
  const std::size_t count = draft.units.size();
  std::vector<VertexLabel> labels(count);
  for (std::size_t i = 0; i < count; ++i)
    labels[i] = VertexLabel{Level::from_units(base, draft.units[i], n), draft.branch[i]};
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  std::vector<std::size_t> new_id(count);
  for (std::size_t i = 0; i < count; ++i) new_id[order[i]] = i;

  GraphInstance g;
  g.family = family;
  g.n = n;
  g.k = k;
  g.vertices.resize(count);
  g.parent.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    g.vertices[new_id[i]] = labels[i];
    if (draft.parent[i]) g.parent[new_id[i]] = std::pair{new_id[draft.parent[i]->first], new_id[draft.parent[i]->second]};
  }
  for (std::size_t i = 1; i < count; ++i)
    if (g.vertices[i - 1] == g.vertices[i]) throw std::logic_error("duplicate vertex label " + g.vertices[i].to_string());
  g.edges.reserve(edges.size());
  for (const auto& [a, b] : edges) g.edges.emplace_back(new_id[a], new_id[b]);
  std::sort(g.edges.begin(), g.edges.end());
  for (auto& gadget : gadgets) {
    gadget.lower = new_id[gadget.lower];
    gadget.upper = new_id[gadget.upper];
    for (auto& v : gadget.inner) v = new_id[v];
  }
  g.gadgets = std::move(gadgets);
  return g;
}

MetricTable::MetricTable(const GraphInstance& g)
    : n_vertices_(g.vertices.size()),
      unit_(g.unit()),
      diameter_units_(g.diameter_units()),
      bottom_(g.bottom()),
      top_(g.top()) {
  if (n_vertices_ > 8192) throw ResourceError("all-pairs metric limited to 8192 vertices");
  d_.assign(n_vertices_ * n_vertices_, std::numeric_limits<std::uint32_t>::max());
  const auto adj = g.adjacency();
  std::vector<std::size_t> queue(n_vertices_);
  for (std::size_t s = 0; s < n_vertices_; ++s) {
    std::uint32_t* row = &d_[s * n_vertices_];
    std::size_t head = 0, tail = 0;
    row[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      const std::size_t u = queue[head++];
      for (std::size_t w : adj[u]) {
        if (row[w] == std::numeric_limits<std::uint32_t>::max()) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n_vertices_) throw std::logic_error("graph is disconnected");
  }
}

MetricTable all_pairs_metric(const GraphInstance& g) { return MetricTable(g); }

std::string vertical_name(Vertical v) {
  switch (v) {
    case Vertical::above: return "above";
    case Vertical::below: return "below";
    default: return "incomparable";
  }
}

Vertical vertical_relation(const MetricTable& metric, std::size_t u, std::size_t v) {
  if (u == v) throw DomainError("vertical_relation needs two distinct vertices");
  const std::uint64_t full = metric.diameter_units();
  const std::size_t b = metric.bottom(), t = metric.top();
  if (std::uint64_t{metric.units(b, u)} + metric.units(u, v) + metric.units(v, t) == full) return Vertical::below;
  if (std::uint64_t{metric.units(b, v)} + metric.units(v, u) + metric.units(u, t) == full) return Vertical::above;
  return Vertical::incomparable;
}

std::pair<VertexLabel, VertexLabel> subdiamond(const VertexLabel& v, int tau) {
  if (v.level.base() != 2) throw DomainError("subdiamond is defined for dyadic labels");
  if (v.level.is_one()) throw DomainError("the top vertex has no subdiamond sequence");
  const int s = v.level.depth();
  if (tau < 0 || tau > s) throw DomainError("tau must lie in [0, s(lambda)]");
  if (static_cast<int>(v.branch.size()) != s) throw DomainError("diamond label length must equal s(lambda)");
  const Level low = v.level.truncated(tau);
  const std::uint64_t low_units = low.units(tau);
  const Level high = Level::from_units(2, low_units + 1, tau);
  auto prefix = [&](const Level& lv) {
    const int len = lv.is_one() ? 0 : lv.depth();
    return std::vector<int>(v.branch.begin(), v.branch.begin() + len);
  };
  return {VertexLabel{low, prefix(low)}, VertexLabel{high, prefix(high)}};
}

std::pair<std::size_t, std::size_t> laakso_vplus_vminus(const GraphInstance& g, std::size_t v) {
  if (g.family != Family::laakso) throw DomainError("v+/v- are defined here for Laakso graphs");
  if (v >= g.vertices.size()) throw DomainError("vertex id out of range");
  if (!g.parent[v]) throw DomainError("the top and the bottom have no v+/v-");
  return *g.parent[v];
}

}  // namespace esa

namespace esa {

namespace {

// Distance from s to t avoiding one vertex; UINT32_MAX when cut off.
std::uint32_t distance_avoiding(const std::vector<std::vector<std::size_t>>& adj, std::size_t s, std::size_t t,
                                std::size_t removed) {
  std::vector<std::uint32_t> dist(adj.size(), std::numeric_limits<std::uint32_t>::max());
  std::deque<std::size_t> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == t) return dist[u];
    for (std::size_t w : adj[u]) {
      if (w == removed || dist[w] != std::numeric_limits<std::uint32_t>::max()) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return std::numeric_limits<std::uint32_t>::max();
}

}  // namespace

CheckResult check_laakso_uniqueness(const GraphInstance& g, const MetricTable& metric) {
  CheckResult result;
  if (g.family != Family::laakso) {
    result.fail("not a Laakso graph");
    return result;
  }
  const auto adj = g.adjacency();
  const std::uint64_t full = g.diameter_units();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (!g.parent[v]) continue;
    ++result.checked;
    const auto [lo, hi] = laakso_vplus_vminus(g, v);
    const Level& lv = g.vertices[v].level;
    const int t = lv.depth();
    const int digit = lv.digit(t);
    const std::uint64_t step = full / (std::uint64_t{1} << (2 * t));  // 4^(n-t) units
    const std::uint64_t units = lv.units(g.n);
    const std::string name = g.vertices[v].to_string();
    if (g.vertices[hi].level.units(g.n) != units + static_cast<std::uint64_t>(4 - digit) * step ||
        g.vertices[lo].level.units(g.n) != units - static_cast<std::uint64_t>(digit) * step)
      result.fail(name + ": v+/v- levels differ from the digit formulas");
    if (g.vertices[hi].level.depth() >= t && !g.vertices[hi].level.is_one())
      result.fail(name + ": t(lambda+) is not smaller than t(lambda)");
    if (g.vertices[lo].level.depth() >= t && !g.vertices[lo].level.is_zero())
      result.fail(name + ": t(lambda-) is not smaller than t(lambda)");
    if (metric.units(v, hi) != (4 - digit) * step || metric.units(v, lo) != digit * step)
      result.fail(name + ": distance to v+/v- differs from the formula");
    if (distance_avoiding(adj, v, g.top(), hi) <= metric.units(v, g.top()))
      result.fail(name + ": a geodesic to the top avoids v+");
    if (distance_avoiding(adj, v, g.bottom(), lo) <= metric.units(v, g.bottom()))
      result.fail(name + ": a geodesic to the bottom avoids v-");
  }
  return result;
}

}  // namespace esa
