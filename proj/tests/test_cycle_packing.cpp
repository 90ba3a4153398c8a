#include <doctest.h>

#include <cmath>
#include <random>

#include "cycleminor/cycle_packing.hpp"
#include "oracles.hpp"

using namespace cycleminor;

namespace {

PathSystem ladder_system(int rungs, int interior = 0, int spacing = 1) {
  const int rail = (rungs - 1) * spacing + 1;
  PathSystem ps;
  for (int i = 0; i < rail; ++i) {
    ps.p1.push_back(i);
    ps.p2.push_back(rail + i);
  }
  int next = 2 * rail;
  for (int r = 0; r < rungs; ++r) {
    Path q{r * spacing};
    for (int i = 0; i < interior; ++i) q.push_back(next++);
    q.push_back(rail + r * spacing);
    ps.links.push_back(q);
  }
  ps.t = rungs;
  return ps;
}

}  // namespace

TEST_CASE("subcubic packing examples") {
  Graph two = disjoint_union(cycle_graph(3), cycle_graph(3));
  auto p = pack_cycles_subcubic(MultiGraph::from_graph(two), 2);
  CHECK(p.reached);
  CHECK(p.cycles.size() == 2);

  MultiGraph theta;  // two vertices joined by three parallel edges
  theta.n = 2;
  theta.edges = {{0, 1}, {0, 1}, {0, 1}};
  auto t = pack_cycles_subcubic(theta, 1);
  REQUIRE(t.reached);
  CHECK(t.cycles.front().vertices.size() == 2);
  CHECK(is_multicycle(theta, t.cycles.front()));

  MultiGraph k4 = MultiGraph::from_graph(complete_graph(4));
  auto none = pack_cycles_subcubic(k4, 2);
  CHECK_FALSE(none.reached);
  CHECK(none.exhaustive);
  CHECK_THROWS_AS(pack_cycles_subcubic(MultiGraph::from_graph(complete_graph(5)), 1), PreconditionError);
  CHECK_THROWS_AS(pack_cycles_subcubic(k4, 2, PackingConfig{1.0, true}), PreconditionError);
}

TEST_CASE("threshold subcubic graphs carry k cycles") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 5);
    auto g = random_subcubic(n, n + 6, rng);
    if (!g) continue;
    auto p = pack_cycles_subcubic(MultiGraph::from_graph(*g), 2, PackingConfig{1.0, true});
    CHECK(p.reached);
    std::vector<Cycle> cycles;
    for (const auto& mc : p.cycles) cycles.push_back(mc.vertices);
    CHECK(verify_cycle_packing(*g, cycles));
  }
}

TEST_CASE("exact packer matches brute force") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    Graph g = random_gnm(n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)), rng);
    const int best = oracle::max_disjoint_cycles(g);
    auto p = pack_disjoint_cycles(MultiGraph::from_graph(g), best + 1, 1'000'000);
    CHECK(p.exhaustive);
    CHECK(static_cast<int>(p.cycles.size()) == best);
    if (best > 0) CHECK(pack_disjoint_cycles(MultiGraph::from_graph(g), best, 1'000'000).reached);
  }
}

TEST_CASE("auxiliary graph and lifting on ladders") {
  Graph l4 = ladder_graph(4);
  PathSystem ps = ladder_system(4);
  REQUIRE(verify_path_system(l4, ps).ok);
  auto one = cycles_from_linkage(l4, ps, 1);
  REQUIRE(one.reached);
  CHECK(one.links_used.front().size() >= 2);

  Graph l8 = ladder_graph(8);
  PathSystem p8 = ladder_system(8);
  auto two = cycles_from_linkage(l8, p8, 2);
  REQUIRE(two.reached);
  CHECK(two.cycles.size() == 2);
  for (const auto& used : two.links_used) CHECK(used.size() == 2);
  CHECK(verify_cycle_packing(l8, two.cycles));
  CHECK(static_cast<int>(two.aux.j.edges.size()) == 7 + 7 + 8);
  CHECK(two.aux.j.max_degree() <= 3);

  Graph sub = ladder_graph(5, 3, 2);
  PathSystem ps5 = ladder_system(5, 3, 2);
  auto lifted = cycles_from_linkage(sub, ps5, 2);
  REQUIRE(lifted.reached);
  for (const Cycle& c : lifted.cycles) {
    CHECK(is_cycle(sub, c));
    CHECK(c.size() >= 2 * 5 + 2);  // two rungs of 5 vertices, plus rail steps
  }
  CHECK(lifted.aux.p1_edges + lifted.aux.p2_edges + lifted.aux.link_edges ==
        static_cast<int>(lifted.aux.j.edges.size()));

  // one link below 2 + 3·c*·k·log k = 2
  CHECK_THROWS_AS(cycles_from_linkage(l4, PathSystem{ps.p1, ps.p2, {ps.links[0]}, 1, {}, {}}, 1,
                                      PackingConfig{1.0, true}),
                  PreconditionError);
}

TEST_CASE("feedback vertex sets and the dichotomy") {
  Graph tree(6);
  for (int v = 1; v < 6; ++v) tree.add_edge(v - 1, v);
  auto forest = cycle_hitting_or_packing(tree, 3);
  REQUIRE(forest.feedback_set);
  CHECK(forest.feedback_set->empty());

  auto k5 = cycle_hitting_or_packing(complete_graph(5), 2);
  CHECK_FALSE(k5.packing);
  REQUIRE(k5.feedback_set);
  CHECK(*k5.feedback_set == VertexSet{0, 1, 2});
  CHECK(k5.bound == doctest::Approx(2.0));
  CHECK(k5.calibration_finding);

  auto two = cycle_hitting_or_packing(disjoint_union(cycle_graph(3), cycle_graph(3)), 2);
  REQUIRE(two.packing);
  CHECK(two.packing->size() == 2);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_gnm(n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)), rng);
    CHECK(static_cast<int>(minimum_feedback_vertex_set(g).size()) == oracle::min_feedback_vertex_set(g));
  }
}

TEST_CASE("k log k") {
  CHECK(k_log_k(1) == 0.0);
  CHECK(k_log_k(2) == doctest::Approx(2.0));
  CHECK(k_log_k(4) == doctest::Approx(8.0));
}
