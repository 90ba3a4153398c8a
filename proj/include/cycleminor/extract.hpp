#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycleminor/bramble.hpp"
#include "cycleminor/cycle_packing.hpp"
#include "cycleminor/graph.hpp"
#include "cycleminor/linkage.hpp"
#include "cycleminor/minor.hpp"

namespace cycleminor {

/// Target H = C_{l1} ∪ ... ∪ C_{lr}, lengths sorted descending.
struct CycleUnionSpec {
  std::vector<int> lengths;
  int max_length = 0;  // declared bound l, at least lengths.front()

  int r() const { return static_cast<int>(lengths.size()); }
  int h() const;
  int longest() const { return lengths.empty() ? 0 : lengths.front(); }

  /// Throws PreconditionError unless lengths are descending, each >= 3, and
  /// max_length >= lengths.front().
  void validate() const;
  /// Parses "l1,l2,..." (must already be descending).
  static CycleUnionSpec parse(const std::string& text);
  static CycleUnionSpec from_lengths(std::vector<int> lengths);
  /// The suffix starting at component `first`, with l reset to its longest.
  CycleUnionSpec suffix(int first) const;
};

struct ConstantsConfig {
  double c_star = 1.0;
  /// Multiplies c and c* in every threshold when relaxed.
  double relaxed_factor = 1.0;
  bool relaxed = false;

  static ConstantsConfig strict_defaults(double c_star = 1.0);
  static ConstantsConfig relaxed_with(double factor, double c_star = 1.0);

  double effective_c_star() const { return relaxed ? c_star * relaxed_factor : c_star; }
  /// 68·c* + 8, scaled by the relaxed factor when relaxed.
  double c() const;

  double case1_budget(int l1) const { return 6.0 * l1; }
  /// 1 + 3·c*·r·log r: Case 2.1 applies at or above it.
  double case_split(int r) const;
  /// ⌊c·r·log r / 4⌋ (at least 1 when relaxed).
  int a(int r) const;
  /// ⌈2^{3/4}·3r/(4·l1)⌉
  int b_cap(int r, int l1) const;
  /// 2 + 3·c*·k·log k: links that guarantee k cycles.
  double linkage_threshold(int k) const;
  /// 1 + c·h·log(r+1) + c·r·log r·log l.
  double order_requirement(const CycleUnionSpec& spec) const;
};

/// Both sides of the Case 2.2 inequality
///   c(Σ_{i<=b} l_i) log r + c r log r log l − c r log r log l_{b+1} >= 3 c r log r / 4
/// with l_{b+1} = l when b = r.
struct Inequality1 {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds() const { return lhs >= rhs; }
};

Inequality1 evaluate_inequality1(const std::vector<int>& lengths, int max_length, int b, double c);

/// Largest i <= min(b_cap, r) with l_i >= 2^{-3/4}·l1.
int choose_b(const std::vector<int>& lengths, int b_cap);

struct LevelRecord {
  int level = 0;
  std::string case_taken;  // "base", "1", "2.1", "2.2", "2.1-diagnostic", "fail"
  std::vector<std::pair<std::string, double>> budgets;
  VertexSet deleted;                   // original host ids
  std::vector<Cycle> committed_cycles; // original host ids
  std::vector<int> committed_components;
  std::optional<Inequality1> inequality1;
  std::string note;
};

struct ExtractionTrace {
  std::vector<LevelRecord> levels;
};

struct ExtractionResult {
  std::optional<MinorModel> model;
  std::vector<Cycle> cycles;  // host cycle per pattern component, when successful
  ExtractionTrace trace;
  std::string failure;

  bool success() const { return model.has_value(); }
};

struct ExtractOptions {
  HittingCycleOptions hitting{};
  long long case1_cycle_budget = 20'000;
  long long packing_node_budget = 500'000;
};

/// Recursive cycle-union minor extraction driven by a bramble. Strict mode
/// checks ord(b) against the order requirement first and throws
/// PreconditionError when it fails. A returned model always verifies
/// against cycle_union_pattern(spec.lengths).
ExtractionResult extract_cycle_union_minor(const Graph& g, const Bramble& b, const CycleUnionSpec& spec,
                                           const ConstantsConfig& cfg, ExtractOptions options = {});

struct Case1Result {
  Cycle cycle;
  BrambleOrder touched;  // order of the elements meeting the cycle, with witness
};

/// Cycle of length >= l1 whose touched subbramble has order <= 6·l1, found
/// by bounded enumeration in order of increasing length.
std::optional<Case1Result> try_case1(const Graph& g, const Bramble& b, const CycleUnionSpec& spec,
                                     const ConstantsConfig& cfg, long long cycle_budget = 20'000);

struct Case21Diagnostic {
  Cycle cycle;       // contains a subpath of p1 with at least l1 vertices
  int order = 0;     // order of the elements meeting the cycle
  int bound = 0;     // |Q_i1| + |Q_i2| + 2t
  int budget = 0;    // 6·l1
};

struct Case21Result {
  PathSystem system;
  std::vector<int> long_links;
  std::vector<int> short_links;
  std::optional<Case21Diagnostic> diagnostic;
  std::optional<LinkagePacking> packing;
};

/// Path system with t = 2·l1 (clamped to what ord(b) allows when relaxed);
/// either the short-link cycle contradicting Case 2, or disjoint cycles
/// through l1+1 long links.
Case21Result run_case2_1(const Graph& g, const Bramble& b, const CycleUnionSpec& spec, const ConstantsConfig& cfg,
                         ExtractOptions options = {});

/// Case 2.1 on a prepared path system (t = ps.t).
Case21Result run_case2_1_on_system(const Graph& g, const Bramble& b, const CycleUnionSpec& spec,
                                   const ConstantsConfig& cfg, const PathSystem& ps, ExtractOptions options = {});

struct Case22Result {
  PathSystem system;
  int a = 0;
  std::vector<int> long_links;
  bool finished_by_long_links = false;
  std::optional<LinkagePacking> packing;  // cycles F_1..F_b (or all r)
  int b = 0;
  Inequality1 inequality1;
  double selection_claim_lhs = 0.0;  // a - (1 + 3c* r log r)
  double selection_claim_rhs = 0.0;  // l1 (2 + 3c* b log b)
  std::vector<int> selected_links;   // S
  int deleted_order = 0;             // ord of elements meeting ∪V(F_i) (upper bound unless deleted_order_exact)
  bool deleted_order_exact = false;
  std::string failure;
};

Case22Result run_case2_2(const Graph& g, const Bramble& b, const CycleUnionSpec& spec, const ConstantsConfig& cfg,
                         ExtractOptions options = {});

/// Case 2.2 on a prepared path system (a = ps.t).
Case22Result run_case2_2_on_system(const Graph& g, const Bramble& b, const CycleUnionSpec& spec,
                                   const ConstantsConfig& cfg, const PathSystem& ps, ExtractOptions options = {});

/// Cycle with at least `min_length` vertices, shortest first, within a DFS step budget.
std::optional<Cycle> find_long_cycle(const Graph& g, int min_length, long long budget = 200'000);

/// Greedy S selection: walk p1 from its start, take the first eligible
/// link endpoint, then require the next to be at least l1 further along.
std::vector<int> select_spaced_links(const PathSystem& ps, const std::vector<int>& eligible, int spacing,
                                     std::size_t count);

}  // namespace cycleminor
