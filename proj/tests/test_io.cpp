#include <doctest.h>

#include <random>

#include "esa/diamond_embedding.hpp"
#include "esa/errors.hpp"
#include "esa/io.hpp"
#include "esa/laakso_embedding.hpp"

using esa::Family;
using esa::Rational;
using esa::RationalVector;
namespace io = esa::io;

TEST_CASE("runs survive a JSON round trip") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> v(20);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    const RationalVector x = RationalVector::from_dense(std::span<const Rational>(v));
    const io::Json j = io::parse(io::dump(io::runs_json(x)));
    CHECK(io::rational_vector_from_json(j) == x);
  }
  const io::Json plain = io::parse(R"([{"start": 2, "len": 3, "val": -1}])");
  CHECK(io::rational_vector_from_json(plain).to_dense(5) == std::vector<Rational>{0, -1, -1, -1, 0});
}

TEST_CASE("malformed input raises ParseError") {
  CHECK_THROWS_AS(io::parse("{\"family\": "), esa::ParseError);
  CHECK_THROWS_AS(io::rational_vector_from_json(io::Json::object()), esa::ParseError);
  CHECK_THROWS_AS(io::rational_vector_from_json(io::parse(R"([{"start": 0, "len": 1, "val": "1"}])")),
                  esa::ParseError);
  CHECK_THROWS_AS(io::rational_vector_from_json(io::parse(R"([{"start": 3, "len": 1, "val": "1"},
                                                              {"start": 1, "len": 1, "val": "1"}])")),
                  esa::ParseError);
  CHECK_THROWS_AS(io::load_embedding(io::parse(R"({"family": "diamond", "n": 1})")), esa::ParseError);
  CHECK_THROWS_AS(io::load_embedding(io::parse(R"({"family": "cube", "n": 1, "k": 2, "vertices": [], "images": {}})")),
                  esa::ParseError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/embedding.json"), esa::ParseError);
}

TEST_CASE("embedding tables load back with their labels and images") {
  for (Family family : {Family::diamond, Family::laakso}) {
    const esa::GraphInstance g = esa::build_graph(family, 1, 3);
    const esa::EmbeddingTable t = family == Family::diamond ? esa::embed_all(g) : esa::LaaksoEmbedding(g).table();
    io::Json j = io::table_json(t);
    CHECK(j["layout"]["length"] == t.layout.total_length());
    j["C"] = "3/2";
    const io::LoadedEmbedding loaded = io::load_embedding(io::parse(io::dump(j)));
    CHECK(loaded.family == family);
    CHECK(loaded.n == 1);
    CHECK(loaded.k == 3);
    REQUIRE(loaded.embedding.C);
    CHECK(*loaded.embedding.C == Rational(3, 2));
    REQUIRE(loaded.embedding.images.size() == t.images.size());
    for (std::size_t i = 0; i < t.images.size(); ++i) {
      CHECK(loaded.embedding.labels[i] == t.labels[i]);
      CHECK(loaded.embedding.images[i] == esa::to_rational(t.images[i]));
    }
  }
}

TEST_CASE("graph exports") {
  const esa::GraphInstance g = esa::build_graph(Family::diamond, 1, 3);
  const io::Json j = io::graph_json(g);
  CHECK(j["vertex_count"] == 5);
  CHECK(j["edge_count"] == 6);
  CHECK(j["edges"].size() == 6);
  const std::string dot = io::graph_dot(g);
  CHECK(dot.rfind("graph \"diamond_1_3\" {", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
  CHECK(edges == 6);
  // Levels 0, 1/2 and 1 each get one rank.
  std::size_t ranks = 0;
  for (std::size_t at = dot.find("rank=same"); at != std::string::npos; at = dot.find("rank=same", at + 1)) ++ranks;
  CHECK(ranks == 3);
  CHECK(io::dump(io::graph_json(esa::build_graph(Family::laakso, 2, 2))) ==
        io::dump(io::graph_json(esa::build_graph(Family::laakso, 2, 2))));
}

TEST_CASE("exact rationals and TSV") {
  const io::Json e = io::exact(Rational(7, 4));
  CHECK(e["exact"] == "7/4");
  CHECK(e["approx"].get<double>() == doctest::Approx(1.75));
  const RationalVector v = RationalVector::from_dense(std::span<const Rational>(std::vector<Rational>{1, Rational(-1, 2)}));
  CHECK(io::dense_tsv(v, 3) == "1\t1\n2\t-1/2\n3\t0\n");
}

TEST_CASE("z-families round trip and Ramsey JSON says it is a bound") {
  std::mt19937_64 rng(3);
  const esa::ZFamily z = esa::random_zfamily(rng, 20, 3, 4);
  const esa::ZFamily back = io::zfamily_from_json(io::parse(io::dump(io::zfamily_json(z))));
  CHECK(back.N == z.N);
  CHECK(back.alpha == z.alpha);
  CHECK(back.z == z.z);
  const io::Json r = io::ramsey_json(esa::ramsey_bound(Rational(2)));
  CHECK(r["exact"] == false);
  CHECK(io::dump(r).find("upper bound") != std::string::npos);
}
