#include "cycleminor/experiments.hpp"

#include <cmath>
#include <sstream>

#include "cycleminor/bramble.hpp"
#include "cycleminor/cycle_packing.hpp"
#include "cycleminor/graph_io.hpp"
#include "cycleminor/treewidth.hpp"

namespace cycleminor {

Graph generate_fixture(const std::string& kind, int size, int extra, std::uint64_t seed) {
  if (size < 0) throw PreconditionError("fixture size must be nonnegative");
  std::mt19937_64 rng(seed);
  if (kind == "grid") return grid_graph(size);
  if (kind == "complete") return complete_graph(size);
  if (kind == "cycle") return cycle_graph(size);
  if (kind == "path") return path_graph(size);
  if (kind == "petersen") return petersen_graph();
  if (kind == "ladder") return ladder_graph(size, extra);
  if (kind == "gnm") return random_gnm(size, extra, rng);
  if (kind == "subcubic") {
    if (auto g = random_subcubic(size, extra, rng)) return *g;
    throw PreconditionError("no subcubic graph with the requested edge count was sampled");
  }
  throw PreconditionError("unknown fixture kind '" + kind + "'");
}

namespace {

double theorem_bound(const CycleUnionSpec& spec) {
  ConstantsConfig cfg = ConstantsConfig::strict_defaults();
  const int r = spec.r();
  const double lr = r > 1 ? std::log2(r) : 0.0;
  return cfg.c() * spec.h() * std::log2(r + 1) + cfg.c() * r * lr * std::log2(spec.max_length);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) g.add_edge(u, v);
    }
  }
  return g;
}

class Estimator {
 public:
  Estimator(const CycleUnionSpec& spec, ExperimentReport& report)
      : pattern_(cycle_union_pattern(spec.lengths)), report_(report) {}

  void consider(const Graph& g, const std::string& id) {
    ++report_.graphs_examined;
    const int tw = exact_treewidth(g).width;
    // Only a potential new maximum needs the minor test.
    if (tw <= report_.max_treewidth_minor_free) return;
    if (find_minor_brute(g, pattern_)) return;
    ++report_.minor_free;
    report_.max_treewidth_minor_free = tw;
    InstanceRecord rec;
    rec.graph_id = id;
    rec.graph = g;
    rec.treewidth = tw;
    rec.bramble_order = bramble_order(g, greedy_bramble(g)).order;
    rec.outcome = "minor_free";
    report_.records.push_back(std::move(rec));
  }

 private:
  Graph pattern_;
  ExperimentReport& report_;
};

}  // namespace

ExperimentReport empirical_f(const CycleUnionSpec& spec, int n_max, int samples, std::uint64_t seed,
                             EmpiricalFOptions options) {
  spec.validate();
  if (n_max > options.guard_max_n) {
    throw GuardExceeded("empirical_f: n-max " + std::to_string(n_max) + " exceeds the minor oracle guard");
  }
  if (samples < 0) throw PreconditionError("empirical_f: samples must be nonnegative");
  ExperimentReport report;
  report.lengths = spec.lengths;
  report.n_max = n_max;
  report.samples = samples;
  report.seed = seed;
  report.theorem_bound = theorem_bound(spec);
  Estimator est(spec, report);

  std::mt19937_64 rng(seed);
  for (int n = 0; n <= n_max; ++n) {
    const int pairs = n * (n - 1) / 2;
    if (n <= options.exhaustive_max_n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        est.consider(graph_from_mask(n, mask), "n" + std::to_string(n) + "-mask" + std::to_string(mask));
      }
      continue;
    }
    std::uniform_int_distribution<int> pick_m(0, pairs);
    for (int s = 0; s < samples; ++s) {
      const int m = pick_m(rng);
      est.consider(random_gnm(n, m, rng),
                   "gnm-n" + std::to_string(n) + "-m" + std::to_string(m) + "-s" + std::to_string(s));
    }
  }
  report.f_lower = report.max_treewidth_minor_free + 1;
  report.within_bound = report.f_lower <= report.theorem_bound;
  return report;
}

Json report_to_json(const ExperimentReport& report) {
  Json records = Json::array();
  for (const auto& rec : report.records) {
    Json item{{"graph_id", rec.graph_id},
              {"graph", serialize_graph(rec.graph, GraphFormat::EdgeList)},
              {"treewidth", rec.treewidth},
              {"bramble_order", rec.bramble_order},
              {"outcome", rec.outcome},
              {"trace_digest", rec.trace_digest}};
    if (rec.model) item["model"] = model_to_json(*rec.model);
    records.push_back(std::move(item));
  }
  return Json{{"lengths", report.lengths},
              {"n_max", report.n_max},
              {"samples", report.samples},
              {"seed", report.seed},
              {"graphs_examined", report.graphs_examined},
              {"minor_free_maxima", report.minor_free},
              {"max_treewidth_minor_free", report.max_treewidth_minor_free},
              {"f_lower", report.f_lower},
              {"theorem_bound", report.theorem_bound},
              {"within_bound", report.within_bound},
              {"records", records}};
}

std::string verify_report_json(const Json& j) {
  try {
    const auto lengths = j.at("lengths").get<std::vector<int>>();
    const Graph pattern = cycle_union_pattern(lengths);
    for (const auto& item : j.at("records")) {
      const std::string id = item.at("graph_id").get<std::string>();
      const Graph g = parse_graph(item.at("graph").get<std::string>(), GraphFormat::EdgeList);
      if (exact_treewidth(g).width != item.at("treewidth").get<int>()) return id + ": treewidth mismatch";
      const std::string outcome = item.at("outcome").get<std::string>();
      if (outcome == "success") {
        if (!item.contains("model")) return id + ": success without a model";
        if (!verify_minor_model(g, pattern, model_from_json(item.at("model")))) return id + ": model does not verify";
      } else if (outcome == "minor_free") {
        if (find_minor_brute(g, pattern)) return id + ": claimed minor-free but a model exists";
      }
    }
  } catch (const std::exception& e) {
    return std::string("malformed report: ") + e.what();
  }
  return {};
}

std::string trace_digest(const ExtractionTrace& trace) {
  const std::string text = trace_to_json(trace).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace cycleminor
