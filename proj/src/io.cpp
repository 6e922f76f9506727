#include "esa/io.hpp"

#include <fstream>
#include <sstream>

#include "esa/errors.hpp"

namespace esa::io {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ResourceError("cannot write " + path);
  out << text;
}

Json exact(const Rational& r) { return Json{{"exact", fraction_string(r)}, {"approx", to_double(r)}}; }

Json graph_json(const GraphInstance& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices)
    vertices.push_back({{"label", v.to_string()}, {"level", fraction_string(v.level.value())}, {"branch", v.branch}});
  Json edges = Json::array();
  for (const auto& [lo, hi] : g.edges) edges.push_back({g.vertices[lo].to_string(), g.vertices[hi].to_string()});
  return Json{{"family", family_name(g.family)},
              {"n", g.n},
              {"k", g.k},
              {"vertex_count", g.vertices.size()},
              {"edge_count", g.edges.size()},
              {"vertices", vertices},
              {"edges", edges}};
}

std::string graph_dot(const GraphInstance& g) {
  std::ostringstream out;
  out << "graph \"" << family_name(g.family) << "_" << g.n << "_" << g.k << "\" {\n";
  out << "  rankdir=BT;\n  node [shape=point];\n";
  // Vertices sharing a level share a rank.
  std::size_t i = 0;
  while (i < g.vertices.size()) {
    std::size_t j = i;
    while (j < g.vertices.size() && g.vertices[j].level == g.vertices[i].level) ++j;
    out << "  { rank=same;";
    for (std::size_t v = i; v < j; ++v) out << " v" << v;
    out << " }\n";
    i = j;
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out << "  v" << v << " [xlabel=\"" << g.vertices[v].to_string() << "\"];\n";
  for (const auto& [lo, hi] : g.edges) out << "  v" << lo << " -- v" << hi << ";\n";
  out << "}\n";
  return out.str();
}

Json runs_json(const SignVector& v) {
  Json out = Json::array();
  for (const auto& r : v.runs()) out.push_back({{"start", r.start}, {"len", r.length}, {"val", std::to_string(r.value)}});
  return out;
}

Json runs_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& r : v.runs()) out.push_back({{"start", r.start}, {"len", r.length}, {"val", compact_string(r.value)}});
  return out;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("runs must be an array");
  RationalVector v;
  try {
    for (const auto& item : j) {
      const auto start = item.at("start").get<std::uint64_t>();
      const auto len = item.at("len").get<std::uint64_t>();
      const Json& val = item.at("val");
      const Rational value = val.is_string() ? parse_rational(val.get<std::string>()) : Rational(val.get<long long>());
      v.append(start, len, value);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed runs: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed runs: ") + e.what());
  }
  return v;
}

std::string dense_tsv(const RationalVector& v, std::uint64_t length) {
  std::ostringstream out;
  const auto values = v.to_dense(length);
  for (std::uint64_t i = 0; i < length; ++i) out << (i + 1) << '\t' << compact_string(values[i]) << '\n';
  return out.str();
}

Json table_json(const EmbeddingTable& table) {
  const BlockLayout& layout = table.layout;
  Json vertices = Json::array();
  Json images = Json::object();
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    const std::string label = table.labels[i].to_string();
    vertices.push_back(label);
    images[label] = runs_json(table.images[i]);
  }
  return Json{{"family", family_name(layout.family)},
              {"n", layout.n},
              {"k", layout.k},
              {"layout",
               {{"M", layout.M},
                {"depth", layout.depth},
                {"block_length", layout.block_length},
                {"blocks", layout.block_count()},
                {"length", layout.total_length()}}},
              {"vertices", vertices},
              {"images", images}};
}

LoadedEmbedding load_embedding(const Json& j) {
  LoadedEmbedding out;
  try {
    out.family = parse_family(j.at("family").get<std::string>());
    out.n = j.at("n").get<int>();
    out.k = j.at("k").get<int>();
    const int base = family_base(out.family);
    const Json& images = j.at("images");
    for (const auto& text : j.at("vertices")) {
      const std::string label = text.get<std::string>();
      out.embedding.labels.push_back(parse_label(label, base));
      out.embedding.images.push_back(rational_vector_from_json(images.at(label)));
    }
    if (j.contains("C")) out.embedding.C = parse_rational(j.at("C").get<std::string>());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed embedding: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed embedding: ") + e.what());
  }
  return out;
}

Json distortion_json(const DistortionReport& report, const EmbeddingTable& table) {
  auto pair = [&](const PairRatio& p) {
    return Json{{"u", table.labels[p.u].to_string()}, {"v", table.labels[p.v].to_string()}, {"ratio", exact(p.ratio)}};
  };
  return Json{{"norm", norm_name(report.norm)},
              {"scale", exact(report.scale)},
              {"lipschitz", exact(report.lipschitz)},
              {"colipschitz", exact(report.colipschitz)},
              {"distortion", exact(report.distortion)},
              {"worst_expansion", pair(report.worst_expansion)},
              {"worst_contraction", pair(report.worst_contraction)},
              {"pairs", report.pairs},
              {"lipschitz_is_scale", report.lipschitz_is_scale},
              {"within_bound", report.within_bound},
              {"pass", report.pass()}};
}

Json factorization_json(const FactorizationResult& result, const std::vector<VertexLabel>& labels) {
  Json out{{"l1_side", result.l1_side}, {"bounded", result.bounded}, {"pass", result.pass}, {"witness", result.witness}};
  if (result.bounded) {
    out["threshold"] = exact(result.threshold);
    out["threshold_is_infimum"] = true;
  } else {
    out["threshold"] = "unbounded";
  }
  if (result.worst_u < labels.size() && result.worst_v < labels.size())
    out["worst_pair"] = {labels[result.worst_u].to_string(), labels[result.worst_v].to_string()};
  return out;
}

Json ramsey_json(const RamseyBound& bound) {
  Json out{{"exponent", bound.exponent.str()},
           {"formula", bound.formula},
           {"upper_bound_expression", bound.upper_bound_expression},
           {"upper_bound", bound.upper_bound ? bound.upper_bound->str() : std::string("overflow")},
           {"exact", bound.exact},
           {"note", "upper bound, not exact"}};
  if (bound.s) {
    out["s"] = bound.s->str();
    out["formula_expanded"] = bound.formula_expanded;
  }
  return out;
}

Json zfamily_json(const ZFamily& z) {
  Json rows = Json::array();
  for (const auto& row : z.z) {
    Json values = Json::array();
    for (const auto& v : row) values.push_back(compact_string(v));
    rows.push_back(values);
  }
  return Json{{"N", z.N}, {"alpha", fraction_string(z.alpha)}, {"z", rows}};
}

ZFamily zfamily_from_json(const Json& j) {
  ZFamily z;
  try {
    z.N = j.at("N").get<std::uint64_t>();
    z.alpha = parse_rational(j.at("alpha").get<std::string>());
    for (const auto& row : j.at("z")) {
      std::vector<Rational> values;
      for (const auto& v : row) values.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>()));
      z.z.push_back(std::move(values));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed family: ") + e.what());
  }
  return z;
}

}  // namespace esa::io
