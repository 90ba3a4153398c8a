#include <doctest.h>

#include <random>

#include "cycleminor/graph_io.hpp"
#include "oracles.hpp"

using namespace cycleminor;

TEST_CASE("edge-list parsing") {
  Graph k3 = parse_graph("3\n0 1\n1 2\n0 2", GraphFormat::EdgeList);
  CHECK(k3 == complete_graph(3));
  CHECK_THROWS_AS(parse_graph("2\n0 0", GraphFormat::EdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("2\n0 2", GraphFormat::EdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("2\n0 1\n1 0", GraphFormat::EdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("2\n0 1 5", GraphFormat::EdgeList), ParseError);
  CHECK_THROWS_AS(parse_graph("", GraphFormat::EdgeList), ParseError);
  Graph commented = parse_graph("# header\n4\n\n0 1 # edge\n2 3\n", GraphFormat::EdgeList);
  CHECK(commented.num_vertices() == 4);
  CHECK(commented.num_edges() == 2);
}

TEST_CASE("graph6 decoding") {
  Graph empty5 = parse_graph("D??", GraphFormat::Graph6);
  CHECK(empty5.num_vertices() == 5);
  CHECK(empty5.num_edges() == 0);
  CHECK(oracle::decode_graph6("D??") == empty5);
  CHECK(parse_graph(">>graph6<<D??", GraphFormat::Graph6) == empty5);
  // K4 is "C~"
  CHECK(parse_graph("C~", GraphFormat::Graph6) == complete_graph(4));
  CHECK(serialize_graph(complete_graph(4), GraphFormat::Graph6).rfind("C~", 0) == 0);
  CHECK_THROWS_AS(parse_graph("D?", GraphFormat::Graph6), ParseError);
}

TEST_CASE("round trips agree with the reference decoder") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 40);
    const int m = n < 2 ? 0 : static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    Graph g = random_gnm(n, m, rng);
    const std::string g6 = serialize_graph(g, GraphFormat::Graph6);
    CHECK(parse_graph(g6, GraphFormat::Graph6) == g);
    CHECK(oracle::decode_graph6(g6) == g);
    CHECK(parse_graph(serialize_graph(g, GraphFormat::EdgeList), GraphFormat::EdgeList) == g);
  }
  Graph big = path_graph(100);
  CHECK(parse_graph(serialize_graph(big, GraphFormat::Graph6), GraphFormat::Graph6) == big);
}

TEST_CASE("format names") {
  CHECK(parse_format("edgelist") == GraphFormat::EdgeList);
  CHECK(parse_format("g6") == GraphFormat::Graph6);
  CHECK_THROWS_AS(parse_format("dot"), ParseError);
}
