#include <doctest.h>

#include "esa/diamond_embedding.hpp"
#include "esa/distortion.hpp"
#include "esa/errors.hpp"
#include "esa/laakso_embedding.hpp"

using esa::Family;
using esa::NormKind;
using esa::Rational;
using esa::SignVector;

namespace {

esa::VertexLabel label(const std::string& text) { return esa::parse_label(text, 4); }

const std::vector<std::pair<int, int>> kInstances{{1, 2}, {1, 3}, {2, 2}};

std::vector<std::int64_t> block_of(const SignVector& x, std::uint64_t L, std::uint64_t nu) {
  const auto d = x.to_dense((nu + 1) * L);
  return {d.begin() + static_cast<std::ptrdiff_t>(nu * L), d.end()};
}

}  // namespace

TEST_CASE("warmup blocks of s_1 and t") {
  esa::LaaksoOptions warmup;
  warmup.empty_label_sign = -1;
  const SignVector s1 = esa::embed_laakso_vertex(1, 2, label("1/4;"), warmup);
  const SignVector t = esa::embed_laakso_vertex(1, 2, label("1/1;"), warmup);
  for (std::uint64_t nu = 0; nu < 4; ++nu) {
    CHECK(block_of(s1, 8, nu) == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0, -1});
    CHECK(block_of(t, 8, nu) == std::vector<std::int64_t>{1, 1, 1, 1, -1, -1, -1, -1});
  }
  // The default sign picks another single-coordinate pair with the same norm.
  const SignVector s1_plus = esa::embed_laakso_vertex(1, 2, label("1/4;"));
  CHECK(block_of(s1_plus, 8, 0) == std::vector<std::int64_t>{0, 1, 0, 0, 0, 0, -1, 0});
}

TEST_CASE("both signs of the empty label give the same norms") {
  for (auto [n, k] : kInstances) {
    const esa::GraphInstance g = esa::build_graph(Family::laakso, n, k);
    esa::LaaksoOptions minus;
    minus.empty_label_sign = -1;
    const esa::EmbeddingTable a = esa::LaaksoEmbedding(g).table();
    const esa::EmbeddingTable b = esa::LaaksoEmbedding(g, minus).table();
    for (std::size_t u = 0; u < g.vertices.size(); ++u)
      for (std::size_t v = u + 1; v < g.vertices.size(); ++v)
        for (NormKind norm : {NormKind::l1, NormKind::summing})
          CHECK(esa::norm(norm, a.images[u] - a.images[v]) == esa::norm(norm, b.images[u] - b.images[v]));
  }
}

TEST_CASE("|P(v, nu)| = 4^n lambda on every block") {
  for (auto [n, k] : kInstances) {
    const esa::GraphInstance g = esa::build_graph(Family::laakso, n, k);
    const esa::EmbeddingTable t = esa::LaaksoEmbedding(g).table();
    const std::uint64_t L = t.layout.block_length;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      const auto d = t.images[v].to_dense(t.layout.total_length());
      const Rational expected = Rational(1 << (2 * n)) * g.vertices[v].level.value();
      for (std::uint64_t nu = 0; nu < t.layout.block_count(); ++nu) {
        std::int64_t positives = 0;
        for (std::uint64_t i = 0; i < L / 2; ++i) {
          positives += d[nu * L + i];
          CHECK(d[nu * L + (L - 1 - i)] == -d[nu * L + i]);
        }
        CHECK(Rational(positives) == expected);
      }
    }
    CHECK(esa::check_table_structure(g, t).pass);
  }
}

TEST_CASE("conditions C1 to C4 hold") {
  for (auto [n, k] : kInstances) {
    const esa::GraphInstance g = esa::build_graph(Family::laakso, n, k);
    const esa::MetricTable m(g);
    const esa::LaaksoEmbedding emb(g);
    const esa::CConditionReport r = esa::verify_c_conditions(emb, m);
    CHECK(r.pass);
    CHECK(r.pairs_checked > 0);
    CHECK(r.witnesses_checked > 0);
    INFO(r.witness);
  }
}

TEST_CASE("A(t, v_i, nu) has two tuples in L_{1,2} and the root witness is empty") {
  const esa::GraphInstance g = esa::build_graph(Family::laakso, 1, 2);
  const esa::LaaksoEmbedding emb(g);
  const std::size_t t = g.top();
  for (std::size_t v : {g.index_of(label("1/2;1")), g.index_of(label("1/2;2"))})
    for (std::uint64_t nu = 0; nu < emb.layout().block_count(); ++nu) {
      const esa::IntervalSet diff = emb.support(t, nu).minus(emb.support(v, nu));
      CHECK(esa::minimal_tuple_cover(diff, 2).size() == 2);
    }
  for (std::uint64_t nu = 0; nu < emb.layout().block_count(); ++nu) CHECK(emb.witness(g.bottom(), t, nu).empty());
  CHECK_THROWS_AS(emb.witness(g.bottom(), g.index_of(label("1/2;1")), 0), esa::DomainError);
}

TEST_CASE("minimal tuple covers") {
  esa::IntervalSet whole;
  whole.add({1, 4});
  CHECK(esa::minimal_tuple_cover(whole, 2) == std::vector<esa::SignTuple>{{}});
  esa::IntervalSet three;
  three.add({1, 3});
  const auto cover = esa::minimal_tuple_cover(three, 2);
  REQUIRE(cover.size() == 2);
  CHECK(cover[0] == esa::SignTuple{-1});
  CHECK(cover[1] == esa::SignTuple{1, -1});
  // Reconstruction: the cover's intervals partition the set.
  esa::IntervalSet odd;
  odd.add({2, 2});
  odd.add({5, 8});
  esa::IntervalSet rebuilt;
  std::uint64_t total = 0;
  for (const auto& eps : esa::minimal_tuple_cover(odd, 3)) {
    const esa::Interval iv = esa::h_interval(3, eps);
    rebuilt.add(iv);
    total += iv.card();
  }
  CHECK(rebuilt == odd);
  CHECK(total == odd.card());
}

TEST_CASE("warmup norm ladder 1:2:3:4 and separation of the v_i") {
  for (int k : {2, 3}) {
    const esa::GraphInstance g = esa::build_graph(Family::laakso, 1, k);
    const esa::EmbeddingTable t = esa::LaaksoEmbedding(g).table();
    const std::size_t s1 = g.index_of(label("1/4;")), t1 = g.index_of(label("3/4;"));
    for (NormKind norm : {NormKind::l1, NormKind::summing}) {
      const std::int64_t top = esa::norm(norm, t.top());
      CHECK(4 * esa::norm(norm, t.images[s1]) == top);
      CHECK(4 * esa::norm(norm, t.images[t1]) == 3 * top);
      for (int i = 1; i <= k; ++i) {
        const std::size_t vi = g.index_of(label("1/2;" + std::to_string(i)));
        CHECK(2 * esa::norm(norm, t.images[vi]) == top);
        for (int j = i + 1; j <= k; ++j) {
          const std::size_t vj = g.index_of(label("1/2;" + std::to_string(j)));
          CHECK(8 * esa::norm(norm, t.images[vi] - t.images[vj]) >= top);
        }
      }
    }
  }
}

TEST_CASE("Laakso distortion is at most 8 with exact vertical isometry") {
  for (auto [n, k] : kInstances) {
    const esa::GraphInstance g = esa::build_graph(Family::laakso, n, k);
    const esa::MetricTable m(g);
    const esa::EmbeddingTable t = esa::LaaksoEmbedding(g).table();
    for (NormKind norm : {NormKind::l1, NormKind::summing}) {
      const esa::DistortionReport r = esa::laakso_distortion_report(m, t, norm);
      CHECK(r.pass());
      CHECK(r.distortion <= 8);
      // Recompute the extreme ratios with run-length norms.
      Rational hi = -1, lo = -1;
      for (std::size_t u = 0; u < g.vertices.size(); ++u)
        for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
          const Rational ratio = Rational(esa::norm(norm, t.images[u] - t.images[v])) / m.distance(u, v);
          if (hi < 0 || ratio > hi) hi = ratio;
          if (lo < 0 || ratio < lo) lo = ratio;
        }
      CHECK(r.lipschitz == hi);
      CHECK(r.colipschitz == lo);
      const esa::PairNorms norms = esa::pairwise_norms(esa::materialize(t), norm);
      CHECK(esa::check_vertical_isometry(m, t, norms).pass);
    }
    CHECK(esa::check_meeting_vertices(g, m).pass);
  }
}

TEST_CASE("incomparable pairs meet through a vertex below or above both") {
  const esa::GraphInstance g = esa::build_graph(Family::laakso, 2, 2);
  const esa::MetricTable m(g);
  const std::size_t b = g.bottom(), t = g.top();
  const std::uint64_t full = m.diameter_units();
  auto below = [&](std::size_t w, std::size_t u) { return m.units(b, w) + m.units(w, u) + m.units(u, t) == full; };
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      if (below(u, v) || below(v, u)) continue;
      bool found = false;
      for (std::size_t w = 0; w < g.vertices.size() && !found; ++w) {
        if (m.units(u, w) + m.units(w, v) != m.units(u, v)) continue;
        found = (below(w, u) && below(w, v)) || (below(u, w) && below(v, w));
      }
      CHECK(found);
    }
}

TEST_CASE("single-vertex images agree with the table and guards") {
  const esa::GraphInstance g = esa::build_graph(Family::laakso, 2, 2);
  const esa::LaaksoEmbedding emb(g);
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    CHECK(esa::embed_laakso_vertex(2, 2, g.vertices[v]) == emb.image(v));
  CHECK_THROWS_AS(esa::LaaksoEmbedding(esa::build_graph(Family::diamond, 1, 2)), esa::DomainError);
  CHECK_THROWS_AS(esa::embed_laakso_vertex(1, 2, label("1/2;3")), esa::DomainError);
  esa::LaaksoOptions tight;
  tight.max_blocks = 16;
  CHECK_THROWS_AS(esa::LaaksoEmbedding(g, tight), esa::ResourceError);
}
