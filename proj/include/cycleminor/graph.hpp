#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycleminor {

using Vertex = int;

/// Sorted, duplicate-free list of vertex identifiers.
using VertexSet = std::vector<Vertex>;

/// Ordered vertex sequence. For a cycle the last vertex is adjacent to the
/// first and is not repeated.
using Path = std::vector<Vertex>;
using Cycle = std::vector<Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exact search would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

VertexSet make_vertex_set(std::vector<Vertex> vs);
bool contains(const VertexSet& s, Vertex v);
bool intersects(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Throws GraphError on loops, duplicates or out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  bool has_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  /// Neighbours in increasing order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Adjacency as bitmasks; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  int num_edges_ = 0;
};

/// Result of deleting vertices: the induced subgraph plus the map from new
/// identifiers back to identifiers of the original graph.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;   // new id -> old id
  std::vector<Vertex> relabel;    // old id -> new id, -1 when deleted

  VertexSet to_original(const VertexSet& s) const;
  std::vector<Vertex> to_original_seq(const std::vector<Vertex>& seq) const;
};

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& x);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected_subset(const Graph& g, const VertexSet& s);
bool is_forest(const Graph& g);

bool is_path(const Graph& g, const Path& p);
bool is_cycle(const Graph& g, const Cycle& c);

/// Shortest cycle (BFS girth), ties broken by smallest vertex; empty if acyclic.
Cycle shortest_cycle(const Graph& g);

/// Length of the longest cycle, 0 for forests. Exhaustive; intended for n <= 12.
int circumference(const Graph& g);

// Fixtures.
Graph grid_graph(int k);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph petersen_graph();
/// Two paths of `rails` vertices joined by rungs; rung i joins the i-th
/// vertices of both rails through `rung_interior` extra vertices. Rungs
/// are placed at rail positions 0, spacing, 2*spacing, ...
Graph ladder_graph(int rungs, int rung_interior = 0, int spacing = 1);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Uniform G(n, m).
Graph random_gnm(int n, int m, std::mt19937_64& rng);

}  // namespace cycleminor
