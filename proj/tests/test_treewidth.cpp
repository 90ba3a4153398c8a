#include <doctest.h>

#include <random>

#include "cycleminor/treewidth.hpp"
#include "oracles.hpp"

using namespace cycleminor;

TEST_CASE("treewidth examples") {
  CHECK(exact_treewidth(path_graph(2)).width == 1);
  Graph tree(9);
  for (int v = 1; v < 9; ++v) tree.add_edge((v - 1) / 2, v);
  CHECK(exact_treewidth(tree).width == 1);
  for (int n = 1; n <= 9; ++n) CHECK(exact_treewidth(complete_graph(n)).width == n - 1);
  CHECK(exact_treewidth(grid_graph(3)).width == 3);
  CHECK(exact_treewidth(Graph(0)).width == 0);
  CHECK(exact_treewidth(Graph(5)).width == 0);
  CHECK(exact_treewidth(petersen_graph()).width == 4);
}

TEST_CASE("decompositions verify and match the reference") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = random_gnm(n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)), rng);
    TreewidthResult res = exact_treewidth(g);
    CHECK(res.width == oracle::treewidth(g));
    CHECK(res.decomposition.width() == res.width);
    auto check = verify_tree_decomposition(g, res.decomposition);
    CHECK_MESSAGE(check.ok, check.reason);
  }
}

TEST_CASE("verify_tree_decomposition examples") {
  Graph g = petersen_graph();
  TreeDecomposition single{{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}}, {}};
  CHECK(verify_tree_decomposition(g, single).ok);
  CHECK(single.width() == 9);
  TreeDecomposition p4{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  CHECK(verify_tree_decomposition(path_graph(4), p4).ok);
  TreeDecomposition missing{{{0, 1}, {2, 3}}, {{0, 1}}};
  CHECK_FALSE(verify_tree_decomposition(path_graph(4), missing).ok);
  TreeDecomposition broken{{{0, 1}, {2, 3}, {1, 2}}, {{0, 1}, {1, 2}}};  // bags of 1 and 2 are split
  CHECK_FALSE(verify_tree_decomposition(path_graph(4), broken).ok);
}

TEST_CASE("duality reports") {
  auto k4 = check_duality(complete_graph(4), singleton_bramble({0, 1, 2, 3}));
  CHECK(k4.order == 4);
  CHECK(k4.treewidth == 3);
  CHECK(k4.tight);
  auto grid = check_duality(grid_graph(3), grid_cross_bramble(3));
  CHECK(grid.order == 4);
  CHECK(grid.tight);
  auto slack = check_duality(grid_graph(3), Bramble{{{0, 1}, {1, 2}}});
  CHECK(slack.order == 1);
  auto two = check_duality(grid_graph(3), Bramble{{{0}, {1}}});
  CHECK(two.order == 2);
  CHECK(two.bound_holds);
  CHECK_FALSE(two.tight);
}

TEST_CASE("grid treewidth and guard") {
  for (int k = 2; k <= 4; ++k) CHECK(exact_treewidth(grid_graph(k)).width == k);
  CHECK(exact_treewidth(grid_graph(5), TreewidthOptions{25}).width == 5);
  CHECK_THROWS_AS(exact_treewidth(complete_graph(21)), GuardExceeded);
}
