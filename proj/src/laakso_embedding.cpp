#include "esa/laakso_embedding.hpp"

#include "esa/errors.hpp"

namespace esa {

namespace {

SignTuple extend(const SignTuple& eps, std::initializer_list<int> tail) {
  SignTuple out = eps;
  out.insert(out.end(), tail);
  return out;
}

}  // namespace

LaaksoEmbedding::LaaksoEmbedding(const GraphInstance& g, const LaaksoOptions& options) : graph_(g) {
  if (g.family != Family::laakso) throw DomainError("LaaksoEmbedding needs a Laakso graph");
  if (options.empty_label_sign != 1 && options.empty_label_sign != -1)
    throw DomainError("empty_label_sign must be +1 or -1");
  layout_ = make_layout(Family::laakso, g.n, g.k, options.max_blocks);
  const Rademacher rad(g.n, g.k);
  auto r = [&](const std::vector<int>& label, std::uint64_t nu) {
    return label.empty() ? options.empty_label_sign : rad(label, nu);
  };
  const std::uint64_t blocks = layout_.block_count();
  const int depth = layout_.depth;
  supports_.assign(g.vertices.size(), std::vector<IntervalSet>(blocks));

  IntervalSet whole;
  whole.add(h_interval(depth, {}));
  std::fill(supports_[g.top()].begin(), supports_[g.top()].end(), whole);
  witnesses_[{g.bottom(), g.top()}] = std::vector<SignTuple>(blocks);

  for (const Gadget& gadget : g.gadgets) {
    const std::size_t lo = gadget.lower, hi = gadget.upper;
    const std::size_t a = gadget.inner.front(), c = gadget.inner.back();
    const std::vector<std::size_t> bs(gadget.inner.begin() + 1, gadget.inner.end() - 1);
    const auto& eps_of = witnesses_.at({lo, hi});
    const std::vector<int>& star = g.vertices[a].branch;
    for (std::size_t b : bs) {
      witnesses_[{a, b}].resize(blocks);
      witnesses_[{b, c}].resize(blocks);
    }
    auto& w_la = witnesses_[{lo, a}];
    auto& w_ch = witnesses_[{c, hi}];
    w_la.resize(blocks);
    w_ch.resize(blocks);
    for (std::uint64_t nu = 0; nu < blocks; ++nu) {
      const SignTuple& eps = eps_of[nu];
      const int r_star = r(star, nu);
      const IntervalSet& base = supports_[lo][nu];

      const SignTuple low_piece = extend(eps, {-1, r_star});
      IntervalSet pa = base;
      pa.add(h_interval(depth, low_piece));
      supports_[a][nu] = pa;
      w_la[nu] = low_piece;

      for (std::size_t b : bs) {
        const int r_b = r(g.vertices[b].branch, nu);
        IntervalSet pb = pa;
        pb.add(h_interval(depth, extend(eps, {1, r_b})));
        supports_[b][nu] = std::move(pb);
        witnesses_[{a, b}][nu] = extend(eps, {1, r_b});
        witnesses_[{b, c}][nu] = extend(eps, {1, -r_b});
      }

      IntervalSet pc = pa;
      pc.add(h_interval(depth, extend(eps, {1})));
      supports_[c][nu] = std::move(pc);
      w_ch[nu] = extend(eps, {-1, -r_star});
    }
  }
}

const SignTuple& LaaksoEmbedding::witness(std::size_t lower, std::size_t upper, std::uint64_t nu) const {
  auto it = witnesses_.find({lower, upper});
  if (it == witnesses_.end()) throw DomainError("no witness recorded for this pair");
  if (nu >= it->second.size()) throw DomainError("block index out of range");
  return it->second[nu];
}

SignVector LaaksoEmbedding::image(std::size_t v) const { return assemble_blocks(layout_, supports_.at(v)); }

EmbeddingTable LaaksoEmbedding::table() const {
  EmbeddingTable t;
  t.layout = layout_;
  t.labels = graph_.vertices;
  t.images.reserve(graph_.vertices.size());
  for (std::size_t v = 0; v < graph_.vertices.size(); ++v) t.images.push_back(image(v));
  return t;
}

SignVector embed_laakso_vertex(int n, int k, const VertexLabel& v, const LaaksoOptions& options) {
  make_layout(Family::laakso, n, k, options.max_blocks);  // budget check before building the graph
  const GraphInstance g = build_graph(Family::laakso, n, k);
  const std::size_t id = g.index_of(v);
  return LaaksoEmbedding(g, options).image(id);
}

namespace {

void cover(const IntervalSet& set, int depth, SignTuple& eps, std::vector<SignTuple>& out) {
  const Interval iv = h_interval(depth, eps);
  if (set.contains(iv)) {
    out.push_back(eps);
    return;
  }
  if (!set.intersects(iv) || static_cast<int>(eps.size()) == depth) return;
  eps.push_back(-1);
  cover(set, depth, eps, out);
  eps.back() = 1;
  cover(set, depth, eps, out);
  eps.pop_back();
}

}  // namespace

std::vector<SignTuple> minimal_tuple_cover(const IntervalSet& set, int depth) {
  std::vector<SignTuple> out;
  SignTuple eps;
  cover(set, depth, eps, out);
  return out;
}

CConditionReport verify_c_conditions(const LaaksoEmbedding& emb, const MetricTable& metric) {
  CConditionReport report;
  const GraphInstance& g = emb.graph();
  const BlockLayout& layout = emb.layout();
  const int depth = layout.depth;
  const std::uint64_t blocks = layout.block_count();

  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const std::uint64_t expected = g.vertices[v].level.units(g.n);  // 4^n lambda
    for (std::uint64_t nu = 0; nu < blocks; ++nu) {
      ++report.cardinality_checked;
      if (emb.support(v, nu).card() != expected)
        report.fail("|P(" + g.vertices[v].to_string() + ")| in block " + std::to_string(nu) + " is not 4^n lambda");
    }
  }

  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      if (u == v || vertical_relation(metric, u, v) != Vertical::below) continue;
      const std::string pair = g.vertices[u].to_string() + " below " + g.vertices[v].to_string();
      for (std::uint64_t nu = 0; nu < blocks; ++nu) {
        ++report.pairs_checked;
        const IntervalSet& pu = emb.support(u, nu);
        const IntervalSet& pv = emb.support(v, nu);
        if (!pu.subset_of(pv)) {
          report.fail(pair + ": P(u) not inside P(v) in block " + std::to_string(nu));
          continue;
        }
        const IntervalSet diff = pv.minus(pu);
        const auto A = minimal_tuple_cover(diff, depth);
        IntervalSet rebuilt;
        bool ok = true;
        for (const auto& eps : A) {
          const Interval iv = h_interval(depth, eps);
          if (rebuilt.intersects(iv)) ok = false;  // (C1)
          else rebuilt.add(iv);
          if (pu.intersects(iv)) ok = false;  // (C2)
          if (!eps.empty()) {                 // (C3): the parent interval is not fully added
            const SignTuple parent(eps.begin(), eps.end() - 1);
            if (diff.contains(h_interval(depth, parent))) ok = false;
          }
        }
        if (!ok || !(rebuilt == diff)) report.fail(pair + ": A-set conditions fail in block " + std::to_string(nu));
      }
    }
  }

  for (std::size_t w = 0; w < g.vertices.size(); ++w) {
    if (!g.parent[w]) continue;
    const auto [lo, hi] = *g.parent[w];
    for (std::uint64_t nu = 0; nu < blocks; ++nu) {
      ++report.witnesses_checked;
      const IntervalSet diff = emb.support(hi, nu).minus(emb.support(lo, nu));
      const auto A = minimal_tuple_cover(diff, depth);
      if (A.size() != 1 || A.front() != emb.witness(lo, hi, nu) || !emb.support(lo, nu).subset_of(emb.support(hi, nu)))
        report.fail("(C4) fails for " + g.vertices[w].to_string() + " in block " + std::to_string(nu));
    }
  }
  return report;
}

CheckResult check_meeting_vertices(const GraphInstance& g, const MetricTable& metric) {
  CheckResult result;
  const std::size_t count = g.vertices.size();
  const std::uint64_t full = g.diameter_units();
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      if (vertical_relation(metric, u, v) != Vertical::incomparable) continue;
      ++result.checked;
      const std::string pair = g.vertices[u].to_string() + " - " + g.vertices[v].to_string();
      // Highest vertex below both and lowest vertex above both on a geodesic.
      std::optional<std::size_t> below, above;
      for (std::size_t w = 0; w < count; ++w) {
        if (w == u || w == v) continue;
        if (std::uint64_t{metric.units(u, w)} + metric.units(w, v) != metric.units(u, v)) continue;
        const Vertical ru = vertical_relation(metric, w, u), rv = vertical_relation(metric, w, v);
        if (ru == Vertical::below && rv == Vertical::below) {
          if (!below || g.vertices[w].level > g.vertices[*below].level) below = w;
        } else if (ru == Vertical::above && rv == Vertical::above) {
          if (!above || g.vertices[w].level < g.vertices[*above].level) above = w;
        }
      }
      if (!below && !above) {
        result.fail(pair + ": no meeting vertex");
        continue;
      }
      for (const auto& [w, digit] : {std::pair{below, 1}, std::pair{above, 3}}) {
        if (!w) continue;
        const Level& omega = g.vertices[*w].level;
        const int t = omega.depth();
        if (omega.digit(t) != digit) result.fail(pair + ": meeting vertex " + g.vertices[*w].to_string() +
                                                 " has last digit " + std::to_string(omega.digit(t)));
        const std::uint64_t bound = 2 * (full >> (2 * t));
        if (metric.units(u, v) > bound) result.fail(pair + ": distance exceeds 2/4^t(omega)");
      }
    }
  }
  return result;
}

}  // namespace esa
