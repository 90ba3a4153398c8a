#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cycleminor/bramble.hpp"
#include "cycleminor/graph.hpp"

namespace cycleminor {

/// Bags indexed by tree node; the tree is given by its edge list.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;

  /// Largest bag size minus one; 0 for a decomposition without vertices.
  int width() const;
};

struct TreewidthResult {
  int width = 0;
  TreeDecomposition decomposition;
  std::vector<Vertex> elimination_order;
};

struct TreewidthOptions {
  int max_vertices = 20;
};

/// Exact treewidth by dynamic programming over vertex subsets (the
/// elimination-ordering recurrence), per connected component. Edgeless
/// and empty graphs have width 0.
TreewidthResult exact_treewidth(const Graph& g, TreewidthOptions options = {});

/// Decomposition induced by an elimination ordering. Components are joined
/// by bridging tree edges so that the tree is connected.
TreeDecomposition decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

struct DecompositionCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks that the tree is a tree, every vertex and edge is covered, and
/// the bags containing each vertex form a connected subtree.
DecompositionCheck verify_tree_decomposition(const Graph& g, const TreeDecomposition& t);

struct DualityReport {
  int order = 0;
  int treewidth = 0;
  VertexSet hitting_set;
  bool bound_holds = false;  // order <= treewidth + 1
  bool tight = false;        // order == treewidth + 1
};

/// Computes both sides of bramble/treewidth duality for a verified bramble.
DualityReport check_duality(const Graph& g, const Bramble& b, TreewidthOptions tw_options = {},
                            BrambleOrderOptions order_options = {});

}  // namespace cycleminor
