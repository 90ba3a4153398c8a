#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cycleminor/extract.hpp"
#include "cycleminor/graph.hpp"
#include "cycleminor/minor.hpp"
#include "cycleminor/serialize.hpp"

namespace cycleminor {

/// Named fixture families. `size` is the grid side, clique order, cycle or
/// path length, ladder rung count, or vertex count for random models;
/// `extra` is the edge count for gnm/subcubic and the rung interior for
/// ladders.
Graph generate_fixture(const std::string& kind, int size, int extra, std::uint64_t seed);

struct InstanceRecord {
  std::string graph_id;
  Graph graph;
  int treewidth = 0;
  int bramble_order = 0;   // certified order of greedy_bramble
  std::string outcome;     // "minor_free", "success", "failure"
  std::optional<MinorModel> model;
  std::string trace_digest;
};

struct ExperimentReport {
  std::vector<int> lengths;
  int n_max = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  long long graphs_examined = 0;
  long long minor_free = 0;
  int max_treewidth_minor_free = -1;   // -1 when no graph was H-minor-free
  int f_lower = 0;                     // max_treewidth_minor_free + 1
  double theorem_bound = 0.0;          // c·h·log(r+1) + c·r·log r·log l, default constants
  bool within_bound = true;
  std::vector<InstanceRecord> records; // each new maximum, in discovery order
};

struct EmpiricalFOptions {
  int exhaustive_max_n = 6;   // every labelled graph up to this order
  int guard_max_n = 12;       // find_minor_brute guard
};

/// Largest treewidth among H-minor-free graphs met: every labelled graph
/// with n <= exhaustive_max_n, then `samples` seeded G(n, m) graphs for
/// each larger n <= n_max. f_lower = that maximum + 1 is a lower bound
/// on f(H).
ExperimentReport empirical_f(const CycleUnionSpec& spec, int n_max, int samples, std::uint64_t seed,
                             EmpiricalFOptions options = {});

Json report_to_json(const ExperimentReport& report);

/// Re-verifies every embedded certificate; returns an empty string or the
/// first problem found.
std::string verify_report_json(const Json& j);

/// Short stable digest of a trace (FNV-1a of its JSON dump).
std::string trace_digest(const ExtractionTrace& trace);

}  // namespace cycleminor
