#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cycleminor/graph.hpp"
#include "cycleminor/linkage.hpp"

namespace cycleminor {

/// Multigraph without loops. Only used for contracted linkage graphs and
/// subcubic packing; parallel edges form 2-cycles.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<std::pair<int, int>>> incidence() const;  // (neighbour, edge id)
  int max_degree() const;
  static MultiGraph from_graph(const Graph& g);
};

/// Closed walk without repeated vertices; edges[i] joins vertices[i] and
/// vertices[i+1] (cyclically). Length 2 is allowed through parallel edges.
struct MultiCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
};

bool is_multicycle(const MultiGraph& g, const MultiCycle& c);

/// k·log2(k), with the k = 1 term equal to 0.
double k_log_k(double k);

struct PackingConfig {
  double c_star = 1.0;
  bool strict = false;
  long long node_budget = 2'000'000;
};

struct MultiPacking {
  std::vector<MultiCycle> cycles;  // pairwise vertex-disjoint
  int requested = 0;
  bool reached = false;
  bool exhaustive = false;  // the exact search finished within budget
};

/// At least k disjoint cycles in a graph of maximum degree <= 3. Strict mode
/// requires |E| >= |V| + 3·c*·k·log k and throws PreconditionError
/// otherwise. Exact branch and bound (branching on a vertex of a shortest
/// cycle: either some cycle through it is used, or it is deleted), with a
/// shortest-cycle-first greedy fallback when the node budget runs out.
/// A shortfall is reported through `reached`, never thrown.
MultiPacking pack_cycles_subcubic(const MultiGraph& g, int k, PackingConfig config = {});

/// Same search without the degree and threshold requirements.
MultiPacking pack_disjoint_cycles(const MultiGraph& g, int k, long long node_budget);

/// Shortest cycle first, ties by smallest vertex id, until none remain.
std::vector<MultiCycle> greedy_cycle_packing(const MultiGraph& g);

/// P1 ∪ P2 ∪ links with every link contracted to one edge.
struct AuxiliaryGraph {
  MultiGraph j;
  std::vector<Vertex> host;   // auxiliary vertex -> host vertex
  std::vector<int> lift;      // auxiliary edge -> link index, -1 for path edges
  int p1_edges = 0;
  int p2_edges = 0;
  int link_edges = 0;
};

AuxiliaryGraph build_auxiliary_graph(const PathSystem& ps);

struct LinkagePacking {
  std::vector<Cycle> cycles;                 // host cycles, pairwise disjoint
  std::vector<std::vector<int>> links_used;  // link indices on each cycle
  AuxiliaryGraph aux;
  int requested = 0;
  bool reached = false;
};

/// Packs disjoint cycles in the contracted graph and lifts them back onto
/// the host; every lifted cycle uses at least two links. Strict mode
/// requires at least 2 + 3·c*·k·log k links.
LinkagePacking cycles_from_linkage(const Graph& g, const PathSystem& ps, int k, PackingConfig config = {});

bool verify_cycle_packing(const Graph& g, const std::vector<Cycle>& cycles);

struct HittingOrPacking {
  std::optional<std::vector<Cycle>> packing;
  std::optional<VertexSet> feedback_set;  // exact minimum feedback vertex set
  double bound = 0.0;                     // c*·k·log k
  bool calibration_finding = false;       // minimum FVS exceeds the bound
};

/// Erdős–Pósa dichotomy computed exactly: k disjoint cycles, or a minimum
/// feedback vertex set compared against c*·k·log k.
HittingOrPacking cycle_hitting_or_packing(const Graph& g, int k, double c_star = 1.0, int max_vertices = 20);

/// Lexicographically first minimum feedback vertex set, by increasing size.
VertexSet minimum_feedback_vertex_set(const Graph& g, int max_vertices = 20);

/// Random graph of maximum degree <= 3 with exactly m edges, if the
/// rejection sampler finds one.
std::optional<Graph> random_subcubic(int n, int m, std::mt19937_64& rng, int attempts = 200);

}  // namespace cycleminor
