#pragma once

#include <string>

#include <json.hpp>

#include "esa/blocks.hpp"
#include "esa/distortion.hpp"
#include "esa/graphs.hpp"
#include "esa/obstruction.hpp"
#include "esa/ramsey.hpp"
#include "esa/sign_vector.hpp"

namespace esa::io {

// std::map-backed, so keys come out sorted and dumps are deterministic.
using Json = nlohmann::json;

// Two-space indentation plus a trailing newline.
std::string dump(const Json& j);
// Throws ParseError with the parser's message.
Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// {"exact": "p/q", "approx": 0.25}
Json exact(const Rational& r);

Json graph_json(const GraphInstance& g);
// Vertices ranked by level, edges drawn upwards.
std::string graph_dot(const GraphInstance& g);

// [{"start": 1, "len": 4, "val": "1"}, ...]
Json runs_json(const SignVector& v);
Json runs_json(const RationalVector& v);
// Accepts "val" as a string ("p/q") or an integer.
RationalVector rational_vector_from_json(const Json& j);

// One "index<TAB>value" line per coordinate 1..length.
std::string dense_tsv(const RationalVector& v, std::uint64_t length);

// {"family", "n", "k", "layout": {...}, "vertices": [labels], "images": {label: runs}}
Json table_json(const EmbeddingTable& table);

struct LoadedEmbedding {
  Family family = Family::diamond;
  int n = 0;
  int k = 2;
  RationalEmbedding embedding;
};

// Reads the table format above; "family", "n", "k" identify the graph and
// "C" ("p/q") is optional. Throws ParseError on malformed input.
LoadedEmbedding load_embedding(const Json& j);

Json distortion_json(const DistortionReport& report, const EmbeddingTable& table);
Json factorization_json(const FactorizationResult& result, const std::vector<VertexLabel>& labels);
Json ramsey_json(const RamseyBound& bound);
Json zfamily_json(const ZFamily& z);
ZFamily zfamily_from_json(const Json& j);

}  // namespace esa::io
