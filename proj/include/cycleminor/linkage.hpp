#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycleminor/bramble.hpp"
#include "cycleminor/graph.hpp"

namespace cycleminor {

/// Raised when a constructive search gives up inside its budget. The object
/// searched for may still exist.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HittingCycleOptions {
  int exhaustive_max_vertices = 12;
  long long exhaustive_step_budget = 2'000'000;
  int heuristic_restarts = 8;
};

/// A cycle meeting every element of `b`. Requires ord(b) >= 3; throws
/// PreconditionError otherwise and BudgetExhausted when no cycle is found
/// within the budget.
Cycle hitting_cycle(const Graph& g, const Bramble& b, HittingCycleOptions options = {});

/// Either k disjoint S-T paths or a vertex cut of size < k separating S
/// from T. Exactly one member is set.
struct LinkageResult {
  std::optional<std::vector<Path>> paths;
  std::optional<VertexSet> cut;
};

/// Vertex-disjoint S-T paths by unit-capacity flow on the split graph.
/// Each path starts in S, ends in T and meets S and T only at its ends. A
/// vertex of S ∩ T forms a one-vertex path. With `minimize_length` the
/// total number of path vertices is minimum over all k-linkages.
LinkageResult disjoint_paths(const Graph& g, const VertexSet& s, const VertexSet& t, int k,
                             bool minimize_length);

/// Maximum number of vertex-disjoint S-T paths.
int max_linkage_size(const Graph& g, const VertexSet& s, const VertexSet& t);

/// True when every S-T path meets `cut`.
bool separates(const Graph& g, const VertexSet& s, const VertexSet& t, const VertexSet& cut);

struct PathSystem {
  Path p1;
  Path p2;
  std::vector<Path> links;  // each runs from a vertex of p1 to a vertex of p2
  int t = 0;
  BrambleOrder p1_witness;  // minimum hitting set of the elements meeting p1
  BrambleOrder p2_witness;
};

struct PathSystemCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Structural invariants: p1 and p2 are disjoint paths, each link joins
/// them and is internally disjoint from both, links are pairwise disjoint.
PathSystemCheck verify_path_system(const Graph& g, const PathSystem& ps);

/// Two disjoint subpaths of a hitting cycle whose touched subbrambles have
/// order exactly t, joined by t disjoint minimum-length links.
/// Requires ord(b) >= 2t+1.
PathSystem path_partition(const Graph& g, const Bramble& b, int t, HittingCycleOptions options = {});

/// Same, from a given cycle meeting every element of `b`.
PathSystem path_partition_on_cycle(const Graph& g, const Bramble& b, const Cycle& cycle, int t);

}  // namespace cycleminor
