#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "slee/errors.hpp"
#include "slee/graph6.hpp"
#include "support/oracles.hpp"

using namespace slee;

TEST_CASE("graph6 known encodings") {
  CHECK(graph6_encode(Graph(0)) == "?");
  CHECK(graph6_encode(Graph(1)) == "@");
  CHECK(graph6_encode(Graph(2, {{0, 1}})) == "A_");
  CHECK(graph6_encode(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == "Bw");
  // The example from the format description: 5 vertices, edges 02 04 13 34.
  CHECK(graph6_encode(Graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
  const Graph big(63);
  const auto text = graph6_encode(big);
  CHECK(text.substr(0, 4) == "~??~");
  CHECK(graph6_decode(text).order() == 63);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = trial % 21;
    Graph g = oracle::random_graph(n, 0.1 + 0.05 * (trial % 15), rng);
    const auto text = graph6_encode(g);
    const Graph back = graph6_decode(text);
    CHECK(back.order() == n);
    CHECK(back.edges() == g.edges());
  }
  Graph g = oracle::random_graph(64, 0.5, rng);
  CHECK(graph6_decode(graph6_encode(g)) == g);
}

TEST_CASE("graph6 rejects malformed input with an offset") {
  CHECK_THROWS_AS(graph6_decode(""), ParseError);
  CHECK_THROWS_AS(graph6_decode("A"), ParseError);     // too short
  CHECK_THROWS_AS(graph6_decode("A__"), ParseError);   // too long
  CHECK_THROWS_AS(graph6_decode("A`"), ParseError);    // nonzero padding
  try {
    graph6_decode("D c");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(graph6_decode("~??A"), ParseError);  // long form for n < 63
}

TEST_CASE("graph6 files") {
  const auto dir = std::filesystem::temp_directory_path() / "slee_graph6_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "in.g6";
  {
    std::ofstream f(path);
    f << ">>graph6<<Bw\n\nDQc\r\n";
  }
  const auto graphs = read_graph6_file(path);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1].size() == 4);

  write_graph6_file(dir / "out.g6", graphs);
  CHECK(read_graph6_file(dir / "out.g6") == graphs);

  {
    std::ofstream f(path);
    f << "Bw\nB!\n";
  }
  try {
    read_graph6_file(path);
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":2") != std::string::npos);
  }
  CHECK_THROWS(read_graph6_file(dir / "missing.g6"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("dot output lists every edge") {
  const auto dot = to_dot(Graph(3, {{0, 1}, {1, 2}}), "P3");
  CHECK(dot.find("graph P3") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
}
