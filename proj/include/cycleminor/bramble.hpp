#pragma once

#include <optional>
#include <vector>

#include "cycleminor/graph.hpp"

namespace cycleminor {

/// Family of connected vertex sets that pairwise intersect or are joined by
/// an edge. Elements are kept sorted.
struct Bramble {
  std::vector<VertexSet> elements;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
};

bool verify_bramble(const Graph& g, const Bramble& b);

/// A vertex set meeting every element of a bramble.
bool is_hitting_set(const Bramble& b, const VertexSet& hs);

struct BrambleOrder {
  int order = 0;
  VertexSet hitting_set;  // one minimum hitting set
};

struct BrambleOrderOptions {
  std::size_t max_elements = 64;
};

/// Exact order (minimum hitting set size) by branch and bound, branching on
/// the unhit element with the fewest vertices and memoising on the set of
/// unhit elements. Brambles whose elements are pairwise disjoint are
/// answered directly. The empty bramble has order 0.
BrambleOrder bramble_order(const Graph& g, const Bramble& b, BrambleOrderOptions options = {});

/// Greedy hitting set; its size is an upper bound on the order and needs no
/// element guard.
VertexSet greedy_hitting_set(const Bramble& b);

/// Elements of `b` meeting `x`.
Bramble subbramble_touching(const Bramble& b, const VertexSet& x);

/// Elements of `b` avoiding `x`, relabelled into the coordinates of
/// delete_vertices(g, x).
Bramble restrict_to_remainder(const Bramble& b, const InducedSubgraph& remainder);

/// Order-(k+1) bramble of the k x k grid: the crosses (row i together with
/// column j) of the top-left (k-1) x (k-1) subgrid, the bottom row, and the
/// right column without its bottom vertex.
Bramble grid_cross_bramble(int k);

/// Each vertex as its own element; a bramble exactly when the set is a clique.
Bramble singleton_bramble(const VertexSet& clique);

/// Heuristic bramble without optimality promise. Candidates: a maximum
/// clique, the cross bramble when `g` is a row-major grid, branch sets of
/// a clique minor found by greedy contraction, and for small graphs the
/// best bramble whose elements are vertices and edges. The candidate of
/// largest certified order is returned.
Bramble greedy_bramble(const Graph& g);

/// Exhaustive search over brambles whose elements are connected sets of at
/// most `max_element_size` vertices (maximal pairwise-touching families,
/// enumerated as maximal cliques of the touching relation). Returns the
/// bramble of largest order. Intended for n <= 10.
Bramble max_order_small_bramble(const Graph& g, int max_element_size);

}  // namespace cycleminor
