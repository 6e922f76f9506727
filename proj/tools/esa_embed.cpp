// esa-embed: generate graphs, embed them, verify the embedding invariants
// and run the obstruction checks. Exit codes: 0 pass, 1 an invariant or
// check failed (the report carries a witness), 2 usage or parse error,
// 3 the instance exceeds the resource budget.

#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "esa/diamond_embedding.hpp"
#include "esa/distortion.hpp"
#include "esa/errors.hpp"
#include "esa/io.hpp"
#include "esa/laakso_embedding.hpp"
#include "esa/norm_axioms.hpp"
#include "esa/obstruction.hpp"
#include "esa/ramsey.hpp"

namespace {

using esa::io::Json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  std::string family = "diamond";
  int n = 1;
  int k = 2;
  std::string norm = "both";
  std::string out;
  std::string input;
  std::uint64_t max_blocks = esa::kDefaultBlockBudget;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  int empty_sign = 1;
  bool axioms = false;
  std::string check;
  std::string C;
  std::string C_squared;
  std::string eta = "1/2";
};

std::vector<esa::NormKind> selected_norms(const std::string& norm) {
  if (norm == "both") return {esa::NormKind::l1, esa::NormKind::summing};
  return {esa::parse_norm(norm)};
}

void emit(const RunConfig& cfg, const Json& report) {
  const std::string text = esa::io::dump(report);
  if (cfg.out.empty()) std::cout << text;
  else esa::io::write_file(cfg.out, text);
}

Json check_json(const esa::CheckResult& r) {
  return Json{{"pass", r.pass}, {"checked", r.checked}, {"witness", r.witness}};
}

// Builds the image table for either family.
esa::EmbeddingTable build_table(const RunConfig& cfg, const esa::GraphInstance& g) {
  if (g.family == esa::Family::diamond) return esa::embed_all(g, esa::EmbedOptions{cfg.max_blocks});
  return esa::LaaksoEmbedding(g, esa::LaaksoOptions{cfg.empty_sign, cfg.max_blocks}).table();
}

int cmd_generate(const RunConfig& cfg) {
  const esa::GraphInstance g = esa::build_graph(esa::parse_family(cfg.family), cfg.n, cfg.k);
  const std::string prefix =
      cfg.out.empty() ? cfg.family + "_" + std::to_string(cfg.n) + "_" + std::to_string(cfg.k) : cfg.out;
  esa::io::write_file(prefix + ".json", esa::io::dump(esa::io::graph_json(g)));
  esa::io::write_file(prefix + ".dot", esa::io::graph_dot(g));
  std::cout << cfg.family << " n=" << cfg.n << " k=" << cfg.k << ": " << g.vertices.size() << " vertices, "
            << g.edges.size() << " edges\n";
  return kExitPass;
}

int cmd_embed(const RunConfig& cfg) {
  const esa::GraphInstance g = esa::build_graph(esa::parse_family(cfg.family), cfg.n, cfg.k);
  const esa::MetricTable metric(g);
  const esa::EmbeddingTable table = build_table(cfg, g);
  if (!cfg.out.empty()) esa::io::write_file(cfg.out, esa::io::dump(esa::io::table_json(table)));
  Json reports = Json::object();
  bool pass = true;
  for (esa::NormKind norm : selected_norms(cfg.norm)) {
    const esa::DistortionReport r = g.family == esa::Family::diamond ? esa::distortion_report(metric, table, norm)
                                                                     : esa::laakso_distortion_report(metric, table, norm);
    reports[esa::norm_name(norm)] = esa::io::distortion_json(r, table);
    pass = pass && r.pass();
  }
  std::cout << esa::io::dump(Json{{"family", cfg.family}, {"n", cfg.n}, {"k", cfg.k}, {"distortion", reports}});
  return pass ? kExitPass : kExitFail;
}

int cmd_verify(const RunConfig& cfg, bool family_given) {
  Json report = Json::object();
  bool pass = true;
  if (cfg.axioms) {
    Json suites = Json::object();
    for (esa::NormKind norm : {esa::NormKind::l1, esa::NormKind::summing}) {
      esa::AxiomSuiteConfig config;
      config.seed = cfg.seed;
      const esa::AxiomSuiteReport r = esa::run_axiom_suite(norm, config);
      suites[esa::norm_name(norm)] = {{"pass", r.pass()},
                                      {"esa_checks", r.esa_checks},
                                      {"sa_checks", r.sa_checks},
                                      {"is_checks", r.is_checks},
                                      {"failures", r.failures},
                                      {"first_failure", r.first_failure}};
      pass = pass && r.pass();
    }
    report["axioms"] = suites;
    report["seed"] = cfg.seed;
  }
  if (family_given || !cfg.axioms) {
    const esa::GraphInstance g = esa::build_graph(esa::parse_family(cfg.family), cfg.n, cfg.k);
    const esa::MetricTable metric(g);
    Json checks = Json::object();
    auto add = [&](const std::string& name, const esa::CheckResult& r) {
      checks[name] = check_json(r);
      pass = pass && r.pass;
    };
    std::optional<esa::LaaksoEmbedding> laakso;
    esa::EmbeddingTable table;
    if (g.family == esa::Family::diamond) {
      table = esa::embed_all(g, esa::EmbedOptions{cfg.max_blocks});
      esa::CheckResult same;
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        ++same.checked;
        if (esa::embed_vertex_inductive(cfg.n, cfg.k, g.vertices[v], esa::EmbedOptions{cfg.max_blocks}) !=
            table.images[v])
          same.fail("formula and inductive images differ at " + g.vertices[v].to_string());
      }
      add("formula_equals_inductive", same);
      add("monotone_supports", esa::check_monotone_supports(g, metric, table));
      add("edge_law", esa::check_edge_law(g, table));
    } else {
      laakso.emplace(g, esa::LaaksoOptions{cfg.empty_sign, cfg.max_blocks});
      table = laakso->table();
      const esa::CConditionReport c = esa::verify_c_conditions(*laakso, metric);
      checks["c_conditions"] = {{"pass", c.pass},
                                {"pairs_checked", c.pairs_checked},
                                {"witnesses_checked", c.witnesses_checked},
                                {"cardinality_checked", c.cardinality_checked},
                                {"witness", c.witness}};
      pass = pass && c.pass;
      add("uniqueness", esa::check_laakso_uniqueness(g, metric));
      add("meeting_vertices", esa::check_meeting_vertices(g, metric));
    }
    add("table_structure", esa::check_table_structure(g, table));
    const esa::DenseImages dense = esa::materialize(table);
    Json distortion = Json::object();
    for (esa::NormKind norm : selected_norms(cfg.norm)) {
      const esa::PairNorms norms = esa::pairwise_norms(dense, norm);
      const esa::DistortionReport r = esa::distortion_from_norms(metric, table, norms);
      distortion[esa::norm_name(norm)] = esa::io::distortion_json(r, table);
      pass = pass && r.pass();
      add("vertical_isometry_" + esa::norm_name(norm), esa::check_vertical_isometry(metric, table, norms));
      if (g.family == esa::Family::diamond)
        add("case_bounds_" + esa::norm_name(norm), esa::check_case_bounds(g, metric, table, norms));
    }
    report["family"] = cfg.family;
    report["n"] = cfg.n;
    report["k"] = cfg.k;
    report["M"] = table.layout.M;
    report["checks"] = checks;
    report["distortion"] = distortion;
  }
  report["pass"] = pass;
  emit(cfg, report);
  return pass ? kExitPass : kExitFail;
}

// x_0 and the x_i from a JSON object {"x0": runs, "xs": [runs, ...]}.
void read_vectors(const Json& j, esa::RationalVector& x0, std::vector<esa::RationalVector>& xs) {
  try {
    x0 = esa::io::rational_vector_from_json(j.at("x0"));
    for (const auto& item : j.at("xs")) xs.push_back(esa::io::rational_vector_from_json(item));
  } catch (const Json::exception& e) {
    throw esa::ParseError(std::string("expected x0 and xs: ") + e.what());
  }
}

std::optional<esa::Rational> optional_rational(const std::string& text, const Json* j, const char* key) {
  if (!text.empty()) return esa::parse_rational(text);
  if (j && j->contains(key)) return esa::parse_rational(j->at(key).get<std::string>());
  return std::nullopt;
}

esa::Rational required_rational(const std::string& text, const Json* j, const char* key) {
  const auto value = optional_rational(text, j, key);
  if (!value) throw esa::ParseError(std::string("missing ") + key);
  return *value;
}

int obstruct_factor(const RunConfig& cfg, bool family_given) {
  Json report;
  esa::FactorizationResult r;
  std::optional<esa::Rational> C = optional_rational(cfg.C, nullptr, "C");
  if (!cfg.input.empty()) {
    const esa::io::LoadedEmbedding loaded = esa::io::load_embedding(esa::io::read_file(cfg.input));
    const esa::GraphInstance g = esa::build_graph(loaded.family, loaded.n, loaded.k);
    esa::RationalEmbedding f = loaded.embedding;
    if (C) f.C = C;
    C = f.C;
    r = esa::check_factorization(f, g, esa::MetricTable(g));
    report = esa::io::factorization_json(r, g.vertices);
    report["family"] = esa::family_name(loaded.family);
    report["n"] = loaded.n;
    report["k"] = loaded.k;
  } else {
    if (!family_given) throw esa::ParseError("factor needs --input or --family/--n/--k");
    const esa::GraphInstance g = esa::build_graph(esa::parse_family(cfg.family), cfg.n, cfg.k);
    const esa::EmbeddingTable table = build_table(cfg, g);
    r = esa::check_factorization(table, esa::MetricTable(g), C);
    report = esa::io::factorization_json(r, g.vertices);
    report["family"] = cfg.family;
    report["n"] = cfg.n;
    report["k"] = cfg.k;
    report["scaling"] = "x / ||x_1||_1";
  }
  if (C) report["C"] = esa::fraction_string(*C);
  emit(cfg, report);
  if (C) return r.pass ? kExitPass : kExitFail;
  return r.l1_side ? kExitPass : kExitFail;
}

int obstruct_midpoints(const RunConfig& cfg) {
  esa::RationalVector x0;
  std::vector<esa::RationalVector> xs;
  std::optional<Json> j;
  if (!cfg.input.empty()) {
    j = esa::io::read_file(cfg.input);
    read_vectors(*j, x0, xs);
  } else {
    // The warmup D_{1,k}: x_0 is the top image, the x_i are the midpoints.
    const esa::GraphInstance g = esa::build_graph(esa::Family::diamond, 1, cfg.k);
    const esa::EmbeddingTable table = esa::embed_all(g, esa::EmbedOptions{cfg.max_blocks});
    x0 = esa::to_rational(table.top());
    for (std::size_t v = 1; v + 1 < g.vertices.size(); ++v) xs.push_back(esa::to_rational(table.images[v]));
  }
  const Json* src = j ? &*j : nullptr;
  const esa::Rational eta = required_rational(src && src->contains("eta") ? "" : cfg.eta, src, "eta");
  const esa::Rational C = required_rational(cfg.C.empty() ? "" : cfg.C, src, "C");
  const esa::MidpointReport r = esa::check_midpoint_family(x0, xs, eta, C);
  emit(cfg, Json{{"midpoint", r.midpoint},
                 {"midpoint2", r.midpoint2},
                 {"far", r.far},
                 {"witness", r.witness},
                 {"eta", esa::fraction_string(eta)},
                 {"C", esa::fraction_string(C)},
                 {"pass", r.pass()}});
  return r.pass() ? kExitPass : kExitFail;
}

int obstruct_reduce(const RunConfig& cfg) {
  esa::RationalVector x0;
  std::vector<esa::RationalVector> xs;
  esa::Rational C;
  Json report;
  if (!cfg.input.empty()) {
    const Json j = esa::io::read_file(cfg.input);
    read_vectors(j, x0, xs);
    C = required_rational(cfg.C, &j, "C");
  } else {
    // A synthetic input with a known reduction, drawn from the seed.
    std::mt19937_64 rng(cfg.seed);
    for (;;) {
      const esa::ZFamily z = esa::random_zfamily(rng, 64, 3, 5);
      try {
        const esa::ReductionInput in = esa::synthesize_reduction_input(z, rng);
        x0 = in.x0;
        xs = in.xs;
        C = in.C;
        report["expected_eta"] = esa::io::exact(in.eta);
        break;
      } catch (const esa::DomainError&) {
      }
    }
    report["seed"] = cfg.seed;
  }
  report["C"] = esa::fraction_string(C);
  try {
    const esa::ReductionResult r = esa::reduce_family(x0, xs, C);
    report["family"] = esa::io::zfamily_json(r.family);
    report["eta"] = esa::io::exact(r.eta);
    report["stretch"] = r.stretch;
    report["pass"] = true;
    emit(cfg, report);
    return kExitPass;
  } catch (const esa::ReductionError& e) {
    report["pass"] = false;
    report["failed"] = e.tag();
    report["witness"] = e.what();
    emit(cfg, report);
    return kExitFail;
  }
}

// Separation and coloring over every triple of one family.
struct TripleTally {
  std::uint64_t triples = 0;
  std::uint64_t red = 0, blue = 0, green = 0;
  std::uint64_t failures = 0;
  std::string witness;
};

void tally_family(const esa::ZFamily& z, TripleTally& t) {
  const esa::RTable table = esa::r_table(z);
  for (std::size_t i = 1; i <= z.k(); ++i)
    for (std::size_t j = i + 1; j <= z.k(); ++j)
      for (std::size_t l = j + 1; l <= z.k(); ++l) {
        ++t.triples;
        switch (esa::color_triple(table, i, j, l)) {
          case esa::TripleColor::red:
            ++t.red;
            break;
          case esa::TripleColor::blue:
            ++t.blue;
            break;
          case esa::TripleColor::green:
            ++t.green;
            break;
        }
        const esa::SeparationResult s = esa::verify_triple_separation(table, i, j, l);
        if (!s.pass) {
          if (t.failures == 0)
            t.witness = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(l) + ") gap " +
                        std::to_string(s.gap);
          ++t.failures;
        }
      }
}

int obstruct_triples(const RunConfig& cfg) {
  TripleTally t;
  Json report;
  if (!cfg.input.empty()) {
    const Json j = esa::io::read_file(cfg.input);
    const esa::ZFamily z = esa::io::zfamily_from_json(j.contains("family") && j["family"].is_object() ? j["family"] : j);
    const esa::ZFamilyCheck check = esa::validate_zfamily(z);
    if (!check.pass()) throw esa::PreconditionError("not a valid family: " + check.witness);
    tally_family(z, t);
    report["families"] = 1;
  } else {
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t s = 0; s < cfg.samples; ++s) tally_family(esa::random_zfamily(rng, 64, 3, 5), t);
    report["families"] = cfg.samples;
    report["seed"] = cfg.seed;
  }
  report["triples"] = t.triples;
  report["colors"] = {{"red", t.red}, {"blue", t.blue}, {"green", t.green}};
  report["separation_failures"] = t.failures;
  report["witness"] = t.witness;
  const bool pass = t.failures == 0 && t.red + t.blue + t.green == t.triples;
  report["pass"] = pass;
  emit(cfg, report);
  return pass ? kExitPass : kExitFail;
}

int obstruct_ramsey(const RunConfig& cfg) {
  esa::RamseyBound b;
  if (!cfg.C_squared.empty()) b = esa::ramsey_bound_from_square(esa::parse_rational(cfg.C_squared));
  else b = esa::ramsey_bound(required_rational(cfg.C, nullptr, "--C"));
  emit(cfg, esa::io::ramsey_json(b));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Embeddings of diamond and Laakso graphs into ESA sequence spaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "diamond or laakso")->check(CLI::IsMember({"diamond", "laakso"}));
    sub->add_option("--n", cfg.n, "recursion depth")->check(CLI::NonNegativeNumber);
    sub->add_option("--k", cfg.k, "branching")->check(CLI::Range(2, 1 << 20));
    sub->add_option("--max-blocks", cfg.max_blocks, "block budget (number of Rademacher blocks)");
    sub->add_option("--empty-sign", cfg.empty_sign, "Laakso sign of the empty branch label")
        ->check(CLI::IsMember({-1, 1}));
  };

  CLI::App* generate = app.add_subcommand("generate", "write graph JSON and DOT");
  add_instance(generate);
  generate->add_option("--out", cfg.out, "output prefix");

  CLI::App* embed = app.add_subcommand("embed", "embed every vertex and report the distortion");
  add_instance(embed);
  embed->add_option("--norm", cfg.norm, "l1, summing or both")->check(CLI::IsMember({"l1", "summing", "both"}));
  embed->add_option("--out", cfg.out, "table JSON path");

  CLI::App* verify = app.add_subcommand("verify", "check every invariant of an instance");
  add_instance(verify);
  verify->add_option("--norm", cfg.norm, "l1, summing or both")->check(CLI::IsMember({"l1", "summing", "both"}));
  verify->add_flag("--axioms", cfg.axioms, "run the norm axiom suites");
  verify->add_option("--seed", cfg.seed, "seed of the axiom suites");
  verify->add_option("--out", cfg.out, "report path (default stdout)");

  CLI::App* obstruct = app.add_subcommand("obstruct", "factorization obstruction checks");
  add_instance(obstruct);
  obstruct->add_option("--check", cfg.check, "factor, midpoints, reduce, triples or ramsey")
      ->required()
      ->check(CLI::IsMember({"factor", "midpoints", "reduce", "triples", "ramsey"}));
  obstruct->add_option("--input", cfg.input, "input JSON");
  obstruct->add_option("--C", cfg.C, "constant C as p/q");
  obstruct->add_option("--C-squared", cfg.C_squared, "C^2 as p/q (ramsey only)");
  obstruct->add_option("--eta", cfg.eta, "eta as p/q (midpoints only)");
  obstruct->add_option("--seed", cfg.seed, "seed of the randomized search");
  obstruct->add_option("--samples", cfg.samples, "number of random families");
  obstruct->add_option("--out", cfg.out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(cfg);
    if (*embed) return cmd_embed(cfg);
    if (*verify) return cmd_verify(cfg, verify->count("--family") + verify->count("--n") + verify->count("--k") > 0);
    const bool family_given = obstruct->count("--family") + obstruct->count("--n") + obstruct->count("--k") > 0;
    if (cfg.check == "factor") return obstruct_factor(cfg, family_given);
    if (cfg.check == "midpoints") return obstruct_midpoints(cfg);
    if (cfg.check == "reduce") return obstruct_reduce(cfg);
    if (cfg.check == "triples") return obstruct_triples(cfg);
    return obstruct_ramsey(cfg);
  } catch (const esa::ResourceError& e) {
    std::cerr << "resource: " << e.what() << "\n";
    return kExitResource;
  } catch (const esa::ParseError& e) {
    std::cerr << "parse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return kExitUsage;
  }
}
