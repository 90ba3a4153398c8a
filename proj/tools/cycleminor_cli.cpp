// Command-line driver. Exit codes: 0 success, 1 usage or parse error,
// 2 honest failure (trace written), 3 guard exceeded.
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cycleminor/bramble.hpp"
#include "cycleminor/experiments.hpp"
#include "cycleminor/extract.hpp"
#include "cycleminor/graph_io.hpp"
#include "cycleminor/serialize.hpp"
#include "cycleminor/treewidth.hpp"

namespace fs = std::filesystem;
using namespace cycleminor;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailure = 2;
constexpr int kGuard = 3;

void write_output(const std::string& dir, const std::string& name, const Json& j) {
  if (dir.empty()) return;
  fs::create_directories(dir);
  write_json_file((fs::path(dir) / name).string(), j);
}

Bramble load_bramble(const Graph& g, const std::string& path) {
  if (path == "auto") return greedy_bramble(g);
  Bramble b = bramble_from_json(read_json_file(path));
  if (!verify_bramble(g, b)) throw PreconditionError("bramble fails verification");
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-union minors from brambles: treewidth, extraction and experiments"};
  app.require_subcommand(1);

  std::string format_name = "edgelist";
  std::string out_dir;

  // treewidth
  auto* tw_cmd = app.add_subcommand("treewidth", "Exact treewidth with a verified decomposition");
  std::string tw_graph;
  int tw_guard = 20;
  tw_cmd->add_option("graph", tw_graph, "Graph file")->required();
  tw_cmd->add_option("--format", format_name, "edgelist or graph6");
  tw_cmd->add_option("--out", out_dir, "Directory for decomposition.json");
  tw_cmd->add_option("--max-vertices", tw_guard, "Guard on the vertex count");

  // bramble
  auto* br_cmd = app.add_subcommand("bramble", "Heuristic bramble with its exact order");
  std::string br_graph;
  int cross = 0;
  br_cmd->add_option("graph", br_graph, "Graph file")->required();
  br_cmd->add_option("--cross", cross, "Use the cross bramble of the k x k grid instead");
  br_cmd->add_option("--format", format_name, "edgelist or graph6");
  br_cmd->add_option("--out", out_dir, "Directory for bramble.json");

  // extract
  auto* ex_cmd = app.add_subcommand("extract", "Extract a cycle-union minor model");
  std::string ex_graph, ex_bramble = "auto", spec_text;
  double c_star = 1.0;
  double relaxed_factor = 0.0;
  ex_cmd->add_option("graph", ex_graph, "Graph file")->required();
  ex_cmd->add_option("bramble", ex_bramble, "Bramble JSON file, or 'auto'");
  ex_cmd->add_option("--format", format_name, "edgelist or graph6");
  ex_cmd->add_option("--spec", spec_text, "Cycle lengths l1,l2,... (descending)")->required();
  ex_cmd->add_option("--c-star", c_star, "Erdős–Pósa constant c*");
  ex_cmd->add_option("--relaxed-factor", relaxed_factor, "Scale thresholds by this factor (relaxed mode)");
  ex_cmd->add_option("--out", out_dir, "Directory for model.json and trace.json");

  // empirical-f
  auto* ef_cmd = app.add_subcommand("empirical-f", "Empirical lower bound on f(H)");
  int n_max = 6, samples = 200;
  std::uint64_t seed = 1;
  ef_cmd->add_option("--spec", spec_text, "Cycle lengths l1,l2,... (descending)")->required();
  ef_cmd->add_option("--n-max", n_max, "Largest vertex count");
  ef_cmd->add_option("--samples", samples, "Random graphs per vertex count above the exhaustive range");
  ef_cmd->add_option("--seed", seed, "Random seed");
  ef_cmd->add_option("--out", out_dir, "Directory for report.json");

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Write a fixture graph to stdout");
  std::string kind;
  int size = 0, extra = 0;
  gen_cmd->add_option("kind", kind, "grid, complete, cycle, path, petersen, ladder, gnm, subcubic")->required();
  gen_cmd->add_option("--size", size, "Main size parameter");
  gen_cmd->add_option("--extra", extra, "Edge count (gnm, subcubic) or rung interior (ladder)");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--format", format_name, "edgelist or graph6");

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Re-verify a certificate file");
  std::string what, ver_graph, ver_file;
  ver_cmd->add_option("what", what, "model, bramble, decomposition or report")->required();
  ver_cmd->add_option("file", ver_file, "Certificate JSON")->required();
  ver_cmd->add_option("--graph", ver_graph, "Graph file (not needed for reports)");
  ver_cmd->add_option("--format", format_name, "edgelist or graph6");
  ver_cmd->add_option("--spec", spec_text, "Cycle lengths, for models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const GraphFormat format = parse_format(format_name);

    if (*tw_cmd) {
      Graph g = read_graph_file(tw_graph, format);
      TreewidthResult res = exact_treewidth(g, TreewidthOptions{tw_guard});
      if (auto check = verify_tree_decomposition(g, res.decomposition); !check) {
        std::cerr << "decomposition failed verification: " << check.reason << '\n';
        return kFailure;
      }
      std::cout << res.width << '\n';
      write_output(out_dir, "decomposition.json", decomposition_to_json(res.decomposition));
      return kOk;
    }

    if (*br_cmd) {
      Graph g = read_graph_file(br_graph, format);
      Bramble b = cross > 0 ? grid_cross_bramble(cross) : greedy_bramble(g);
      if (!verify_bramble(g, b)) throw PreconditionError("bramble fails verification on this graph");
      BrambleOrder ord = bramble_order(g, b);
      Json j = bramble_to_json(b);
      std::cout << Json{{"order", ord.order}, {"hitting_set", ord.hitting_set}, {"bramble", j}}.dump() << '\n';
      write_output(out_dir, "bramble.json", j);
      return kOk;
    }

    if (*ex_cmd) {
      CycleUnionSpec spec = CycleUnionSpec::parse(spec_text);
      Graph g = read_graph_file(ex_graph, format);
      Bramble b = load_bramble(g, ex_bramble);
      ConstantsConfig cfg = relaxed_factor > 0.0 ? ConstantsConfig::relaxed_with(relaxed_factor, c_star)
                                                 : ConstantsConfig::strict_defaults(c_star);
      ExtractionResult res = extract_cycle_union_minor(g, b, spec, cfg);
      Json trace = trace_to_json(res.trace);
      Json summary{{"success", res.success()}, {"trace", trace}};
      write_output(out_dir, "trace.json", trace);
      if (res.success()) {
        summary["model"] = model_to_json(*res.model);
        summary["cycles"] = res.cycles;
        write_output(out_dir, "model.json", summary["model"]);
      } else {
        summary["failure"] = res.failure;
      }
      std::cout << summary.dump() << '\n';
      return res.success() ? kOk : kFailure;
    }

    if (*ef_cmd) {
      CycleUnionSpec spec = CycleUnionSpec::parse(spec_text);
      Json report = report_to_json(empirical_f(spec, n_max, samples, seed));
      std::cout << report.dump() << '\n';
      write_output(out_dir, "report.json", report);
      return kOk;
    }

    if (*gen_cmd) {
      std::cout << serialize_graph(generate_fixture(kind, size, extra, seed), format);
      return kOk;
    }

    if (*ver_cmd) {
      Json j = read_json_file(ver_file);
      std::string problem;
      if (what == "report") {
        problem = verify_report_json(j);
      } else {
        if (ver_graph.empty()) throw PreconditionError("--graph is required for " + what);
        Graph g = read_graph_file(ver_graph, format);
        if (what == "model") {
          CycleUnionSpec spec = CycleUnionSpec::parse(spec_text);
          MinorCheck check = verify_minor_model(g, cycle_union_pattern(spec.lengths), model_from_json(j));
          if (!check) problem = to_string(check.violations.front().kind);
        } else if (what == "bramble") {
          if (!verify_bramble(g, bramble_from_json(j))) problem = "not a bramble";
        } else if (what == "decomposition") {
          if (auto check = verify_tree_decomposition(g, decomposition_from_json(j)); !check) problem = check.reason;
        } else {
          throw PreconditionError("unknown certificate kind '" + what + "'");
        }
      }
      std::cout << (problem.empty() ? "ok" : "invalid: " + problem) << '\n';
      return problem.empty() ? kOk : kFailure;
    }
  } catch (const GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
