#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycleminor/graph.hpp"

namespace cycleminor {

/// Branch set per pattern vertex, indexed by pattern vertex id.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

struct MinorViolation {
  enum class Kind { WrongArity, InvalidVertex, Empty, Overlap, Disconnected, MissingEdge };
  Kind kind;
  std::vector<Vertex> pattern_vertices;  // the pattern vertices involved
};

std::string to_string(MinorViolation::Kind kind);

struct MinorCheck {
  std::vector<MinorViolation> violations;
  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }
};

/// Checks disjointness, connectivity and edge realisation of `model`.
MinorCheck verify_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model);

struct MinorSearchOptions {
  int max_host_vertices = 12;
};

/// Exhaustive branch-set search. Returns a model that passed
/// verify_minor_model, or nullopt when none exists. Throws GuardExceeded
/// beyond `max_host_vertices` (hard limit 64).
std::optional<MinorModel> find_minor_brute(const Graph& host, const Graph& pattern,
                                           MinorSearchOptions options = {});

/// Disjoint union of cycles of the given lengths; cycle i occupies a
/// consecutive block of vertex ids in order.
Graph cycle_union_pattern(const std::vector<int>& lengths);

/// Contracts each host cycle onto a pattern cycle. `cycles[i]` must have at
/// least `lengths[i]` vertices; pattern ids follow cycle_union_pattern.
MinorModel model_from_cycles(const std::vector<Cycle>& cycles, const std::vector<int>& lengths);

}  // namespace cycleminor
