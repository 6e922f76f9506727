// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <functional>
#include <map>
#include <iostream>
#include <random>
#include <sstream>

#include "esa/diamond_embedding.hpp"
#include "esa/distortion.hpp"
#include "esa/errors.hpp"
#include "esa/laakso_embedding.hpp"
#include "esa/norm_axioms.hpp"
#include "esa/obstruction.hpp"

using esa::Family;
using esa::NormKind;
using esa::Rational;

namespace {

// Wall-clock limits in seconds; exact comparisons leave no numeric tolerance.
constexpr double kLimitAxioms = 10;
constexpr double kLimitFormula = 60;
constexpr double kLimitStructure = 120;
constexpr double kLimitDiamond = 120;
constexpr double kLimitLaakso = 120;
constexpr double kLimitObstruction = 60;
constexpr double kLimitFactorization = 120;

constexpr std::uint64_t kAxiomSeed = 20260401;
constexpr std::uint64_t kFamilySeed = 4242;
constexpr std::size_t kFamilies = 10000;

const std::vector<std::pair<int, int>> kDiamonds{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}};
const std::vector<std::pair<int, int>> kLaakso{{1, 2}, {1, 3}, {2, 2}};
const std::vector<std::pair<int, int>> kFactor{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

std::string instance(Family f, int n, int k) {
  return esa::family_name(f) + "(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

// Every block is 1_P minus its mirror with |P| = scale * lambda.
void check_blocks(const esa::GraphInstance& g, const esa::EmbeddingTable& t, std::int64_t scale, Outcome& out) {
  const std::uint64_t L = t.layout.block_length;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto d = t.images[v].to_dense(t.layout.total_length());
    const Rational expected = Rational(scale) * g.vertices[v].level.value();
    for (std::uint64_t nu = 0; nu < t.layout.block_count(); ++nu) {
      std::int64_t positives = 0;
      for (std::uint64_t i = 0; i < L / 2; ++i) {
        const std::int64_t x = d[nu * L + i], mirror = d[nu * L + (L - 1 - i)];
        if ((x != 0 && x != 1) || mirror != -x) out.fail(instance(g.family, g.n, g.k) + " block symmetry");
        positives += x;
      }
      if (Rational(positives) != expected)
        out.fail(instance(g.family, g.n, g.k) + " |P| at " + g.vertices[v].to_string());
    }
  }
}

void criterion_axioms(Outcome& out) {
  for (NormKind norm : {NormKind::l1, NormKind::summing}) {
    esa::AxiomSuiteConfig config;
    config.seed = kAxiomSeed;
    config.vectors = 1000;
    config.spreadings = 100;
    const esa::AxiomSuiteReport r = esa::run_axiom_suite(norm, config);
    out.detail << esa::norm_name(norm) << ": " << r.esa_checks << " ESA, " << r.sa_checks << " SA, " << r.is_checks
               << " IS checks, " << r.failures << " failures; ";
    if (!r.pass()) out.fail(esa::norm_name(norm) + " " + r.first_failure);
  }
}

void criterion_formula(Outcome& out) {
  std::size_t vertices = 0;
  for (auto [n, k] : kDiamonds) {
    const esa::GraphInstance g = esa::build_graph(Family::diamond, n, k);
    for (const auto& v : g.vertices) {
      ++vertices;
      if (esa::embed_vertex_formula(n, k, v) != esa::embed_vertex_inductive(n, k, v))
        out.fail(instance(Family::diamond, n, k) + " at " + v.to_string());
    }
  }
  out.detail << vertices << " vertices compared; ";
}

void criterion_structure(Outcome& out) {
  for (auto [n, k] : kDiamonds) {
    const esa::GraphInstance g = esa::build_graph(Family::diamond, n, k);
    check_blocks(g, esa::embed_all(g), std::int64_t{1} << n, out);
  }
  for (auto [n, k] : kLaakso) {
    const esa::GraphInstance g = esa::build_graph(Family::laakso, n, k);
    const esa::LaaksoEmbedding emb(g);
    check_blocks(g, emb.table(), std::int64_t{1} << (2 * n), out);
    const esa::CConditionReport c = esa::verify_c_conditions(emb, esa::MetricTable(g));
    out.detail << instance(Family::laakso, n, k) << " C1-C4 on " << c.pairs_checked << " pairs; ";
    if (!c.pass) out.fail(instance(Family::laakso, n, k) + " " + c.witness);
  }
}

// Lipschitz constant equals the top norm, vertical pairs are isometric and
// the distortion is at most 8; the ratios are recomputed from run lengths.
void check_distortion(const esa::GraphInstance& g, const esa::EmbeddingTable& t, NormKind norm, Outcome& out) {
  const esa::MetricTable m(g);
  const std::string name = instance(g.family, g.n, g.k) + " " + esa::norm_name(norm);
  const Rational scale(esa::norm(norm, t.top()));
  Rational hi = -1, lo = -1;
  for (std::size_t u = 0; u < g.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      const Rational ratio = Rational(esa::norm(norm, t.images[u] - t.images[v])) / m.distance(u, v);
      if (hi < 0 || ratio > hi) hi = ratio;
      if (lo < 0 || ratio < lo) lo = ratio;
    }
  const esa::PairNorms norms = esa::pairwise_norms(esa::materialize(t), norm);
  const esa::DistortionReport r = esa::distortion_from_norms(m, t, norms);
  if (r.lipschitz != hi || r.colipschitz != lo) out.fail(name + " kernel sweep disagrees with run lengths");
  if (hi != scale) out.fail(name + " Lipschitz constant " + esa::fraction_string(hi));
  if (hi > 8 * lo) out.fail(name + " distortion " + esa::fraction_string(hi / lo));
  if (!esa::check_vertical_isometry(m, t, norms).pass) out.fail(name + " vertical isometry");
  out.detail << name << " " << esa::compact_string(hi / lo) << "; ";
}

void criterion_diamond(Outcome& out) {
  for (auto [n, k] : kDiamonds) {
    const esa::GraphInstance g = esa::build_graph(Family::diamond, n, k);
    const esa::EmbeddingTable t = esa::embed_all(g);
    for (NormKind norm : {NormKind::l1, NormKind::summing}) check_distortion(g, t, norm, out);
  }
  for (int k : {2, 3, 4}) {
    const esa::GraphInstance g = esa::build_graph(Family::diamond, 1, k);
    const esa::EmbeddingTable t = esa::embed_all(g);
    for (NormKind norm : {NormKind::l1, NormKind::summing}) {
      const std::int64_t top = esa::norm(norm, t.top());
      for (std::size_t i = 1; i + 1 < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < g.vertices.size(); ++j)
          if (4 * esa::norm(norm, t.images[i] - t.images[j]) < top)
            out.fail(instance(Family::diamond, 1, k) + " midpoint separation");
    }
  }
}

void criterion_laakso(Outcome& out) {
  for (auto [n, k] : kLaakso) {
    const esa::GraphInstance g = esa::build_graph(Family::laakso, n, k);
    const esa::EmbeddingTable t = esa::LaaksoEmbedding(g).table();
    for (NormKind norm : {NormKind::l1, NormKind::summing}) check_distortion(g, t, norm, out);
  }
  for (int k : {2, 3}) {
    const esa::GraphInstance g = esa::build_graph(Family::laakso, 1, k);
    const esa::EmbeddingTable t = esa::LaaksoEmbedding(g).table();
    auto at = [&](const std::string& text) { return g.index_of(esa::parse_label(text, 4)); };
    for (NormKind norm : {NormKind::l1, NormKind::summing}) {
      const std::int64_t top = esa::norm(norm, t.top());
      if (4 * esa::norm(norm, t.images[at("1/4;")]) != top || 4 * esa::norm(norm, t.images[at("3/4;")]) != 3 * top)
        out.fail(instance(Family::laakso, 1, k) + " ladder at s_1 or t_1");
      for (int i = 1; i <= k; ++i) {
        const auto& vi = t.images[at("1/2;" + std::to_string(i))];
        if (2 * esa::norm(norm, vi) != top) out.fail(instance(Family::laakso, 1, k) + " ladder at v_i");
        for (int j = i + 1; j <= k; ++j)
          if (8 * esa::norm(norm, vi - t.images[at("1/2;" + std::to_string(j))]) < top)
            out.fail(instance(Family::laakso, 1, k) + " v_i separation");
      }
    }
  }
}

std::uint64_t r_by_definition(const esa::ZFamily& z, std::size_t i, std::size_t j, Outcome& out) {
  Rational prefix = 0;
  for (std::uint64_t m = 0; m < z.N; ++m) {
    prefix += z.z[i - 1][m] - z.z[j - 1][m];
    if (esa::abs_of(prefix) >= z.alphaN()) {
      if (esa::abs_of(prefix) >= z.alphaN() + 1) out.fail("prefix overshoots alpha N + 1");
      return m + 1;
    }
  }
  out.fail("no prefix reaches alpha N");
  return 0;
}

// Returned families must satisfy every conclusion; failures must raise.
void check_reduction(const esa::RationalVector& x0, const std::vector<esa::RationalVector>& xs, const Rational& C,
                     const std::vector<std::vector<Rational>>* expected, std::size_t& held, std::size_t& raised,
                     Outcome& out) {
  try {
    const esa::ReductionResult r = esa::reduce_family(x0, xs, C);
    ++held;
    const esa::ZFamily& z = r.family;
    if (Rational(z.N) != esa::l1_norm(x0)) out.fail("reduced N differs from ||x_0||_1");
    if (z.alphaN() < 2) out.fail("reduced alpha N below 2");
    for (std::size_t i = 0; i < z.k(); ++i)
      for (std::size_t j = i + 1; j < z.k(); ++j) {
        Rational prefix = 0, best = 0;
        for (std::uint64_t m = 0; m < z.N; ++m) {
          const Rational d = z.z[i][m] - z.z[j][m];
          if (esa::abs_of(d) > 1) out.fail("reduced coordinates differ by more than 1");
          prefix += d;
          best = std::max(best, esa::abs_of(prefix));
        }
        if (best < z.alphaN()) out.fail("reduced family is not alpha N separated");
      }
    if (expected && z.z != *expected) out.fail("reduction did not recover the synthesized family");
  } catch (const esa::ReductionError&) {
    ++raised;
    if (expected) out.fail("synthesized input raised");
  } catch (const esa::PreconditionError&) {
    ++raised;
  }
}

void criterion_obstruction(Outcome& out) {
  std::mt19937_64 rng(kFamilySeed);
  std::size_t triples = 0, pairs = 0, held = 0, raised = 0;
  std::uint64_t colors[3] = {0, 0, 0};
  for (std::size_t f = 0; f < kFamilies; ++f) {
    const esa::ZFamily z = esa::random_zfamily(rng, 64, 2, 5);
    const esa::RTable t = esa::r_table(z);
    for (std::size_t i = 1; i <= z.k(); ++i)
      for (std::size_t j = i + 1; j <= z.k(); ++j) {
        ++pairs;
        if (t.at(i, j) != r_by_definition(z, i, j, out) || t.at(j, i) != t.at(i, j)) out.fail("r table mismatch");
      }
    for (std::size_t i = 1; i <= z.k(); ++i)
      for (std::size_t j = i + 1; j <= z.k(); ++j)
        for (std::size_t l = j + 1; l <= z.k(); ++l) {
          ++triples;
          const std::uint64_t a = t.at(i, j), b = t.at(i, l), c = t.at(j, l);
          const std::uint64_t hi = std::max({a, b, c}), lo = std::min({a, b, c});
          if (Rational(2 * (hi - lo)) < z.alphaN() - 1 || !esa::verify_triple_separation(t, i, j, l).pass)
            out.fail("separation at a triple");
          const bool red = hi == c, blue = hi == a && hi != c, green = hi != a && hi != c;
          if (red + blue + green != 1) out.fail("colors overlap or miss");
          const esa::TripleColor color = esa::color_triple(t, i, j, l);
          const esa::TripleColor expected =
              red ? esa::TripleColor::red : (blue ? esa::TripleColor::blue : esa::TripleColor::green);
          if (color != expected) out.fail("color disagrees with the definition");
          ++colors[static_cast<int>(color)];
        }
    if (f % 4 != 0) continue;
    try {
      const esa::ReductionInput in = esa::synthesize_reduction_input(z, rng);
      check_reduction(in.x0, in.xs, in.C, &in.z, held, raised, out);
    } catch (const esa::DomainError&) {
      // No rational C fits when the least summing distance is exactly 2.
    }
  }
  // Unstructured inputs: the reduction must hold or raise.
  std::uniform_int_distribution<int> len(4, 24), coeff(-3, 3), k_dist(2, 4);
  for (std::size_t f = 0; f < 2000; ++f) {
    const int p = len(rng);
    std::vector<Rational> d0(p);
    for (auto& v : d0) v = coeff(rng);
    const esa::RationalVector x0 = esa::RationalVector::from_dense(std::span<const Rational>(d0));
    std::vector<esa::RationalVector> xs(k_dist(rng));
    for (auto& x : xs) {
      std::vector<Rational> d(p);
      for (auto& v : d) v = Rational(coeff(rng), 2);
      x = esa::RationalVector::from_dense(std::span<const Rational>(d));
    }
    check_reduction(x0, xs, Rational(3, 2), nullptr, held, raised, out);
  }
  if (colors[0] + colors[1] + colors[2] != triples) out.fail("color counts do not cover the triples");
  out.detail << kFamilies << " families, " << pairs << " pairs, " << triples << " triples (" << colors[0] << " red, "
             << colors[1] << " blue, " << colors[2] << " green); reductions (every 4th family plus 2000 unstructured inputs) " << held << " held, " << raised
             << " raised; ";

  // Hand-built tables with alpha N = 3, h = 1 and alpha = 1/2.
  const Rational alpha(1, 2);
  const std::vector<std::size_t> B{1, 2, 3, 4};
  esa::RTable red = esa::make_rtable(4, 3), blue = esa::make_rtable(4, 3), corrupt = esa::make_rtable(4, 3);
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j) {
      red.set(i, j, i + 1);
      blue.set(i, j, 6 - j);
      corrupt.set(i, j, i == 3 ? 4 : 2);
    }
  esa::RTable green = esa::make_rtable(8, 3);
  for (std::size_t i = 1; i <= 8; ++i)
    for (std::size_t j = i + 1; j <= 8; ++j) {
      std::uint64_t lg = 0;
      while ((std::uint64_t{2} << lg) <= j - i) ++lg;
      green.set(i, j, lg + 2 + (j - i));
    }
  const std::vector<std::size_t> B8{1, 2, 3, 4, 5, 6, 7, 8};
  if (!esa::monochromatic_chain_check(red, B, esa::TripleColor::red, alpha).pass()) out.fail("red chain rejected");
  if (!esa::monochromatic_chain_check(blue, B, esa::TripleColor::blue, alpha).pass()) out.fail("blue chain rejected");
  if (!esa::monochromatic_chain_check(green, B8, esa::TripleColor::green, alpha).pass())
    out.fail("green chain rejected");
  const esa::ChainReport bad = esa::monochromatic_chain_check(corrupt, B, esa::TripleColor::red, alpha);
  if (bad.chain || bad.witness.rfind("(b_2,b_3)", 0) != 0) out.fail("corrupted table accepted");
  out.detail << "corrupted table rejected at " << bad.witness << "; ";
}

void criterion_factorization(Outcome& out) {
  std::map<int, Rational> last;
  for (auto [n, k] : kFactor) {
    const esa::GraphInstance g = esa::build_graph(Family::diamond, n, k);
    const esa::FactorizationResult r = esa::check_factorization(esa::embed_all(g), esa::MetricTable(g));
    out.detail << "C*" << instance(Family::diamond, n, k) << " = " << esa::compact_string(r.threshold) << "; ";
    if (!r.l1_side || !r.bounded) out.fail(instance(Family::diamond, n, k) + " " + r.witness);
    if (last.count(n) && r.threshold < last[n]) out.fail("C* decreases in k at n = " + std::to_string(n));
    last[n] = r.threshold;
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "norm axioms", kLimitAxioms, criterion_axioms},
      {2, "formula equals induction", kLimitFormula, criterion_formula},
      {3, "structural laws", kLimitStructure, criterion_structure},
      {4, "diamond distortion", kLimitDiamond, criterion_diamond},
      {5, "Laakso distortion", kLimitLaakso, criterion_laakso},
      {6, "obstruction suite", kLimitObstruction, criterion_obstruction},
      {7, "factorization constant nondecreasing in k", kLimitFactorization, criterion_factorization},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit) {
      std::ostringstream why;
      why << "took " << seconds << " s, limit " << c.limit << " s";
      out.fail(why.str());
    }
    all = all && out.pass;
    std::cout << "criterion " << c.id << " (" << c.name << "): " << (out.pass ? "PASS" : "FAIL") << " in " << seconds
              << " s; " << out.detail.str() << "\n";
  }
  return all ? 0 : 1;
}
