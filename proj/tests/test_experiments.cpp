#include <doctest.h>

#include "cycleminor/experiments.hpp"
#include "cycleminor/graph_io.hpp"

using namespace cycleminor;

TEST_CASE("empirical f for single cycles") {
  auto c3 = empirical_f(CycleUnionSpec::from_lengths({3}), 6, 0, 1);
  CHECK(c3.max_treewidth_minor_free == 1);  // triangle-minor-free means forest
  CHECK(c3.f_lower == 2);
  CHECK(c3.within_bound);
  auto c4 = empirical_f(CycleUnionSpec::from_lengths({4}), 6, 0, 1);
  CHECK(c4.max_treewidth_minor_free == 2);
  CHECK(c4.f_lower == 3);
  REQUIRE_FALSE(c4.records.empty());
  CHECK(c4.records.back().treewidth == 2);
  CHECK(c4.records.back().bramble_order == 3);
}

TEST_CASE("empirical f for two triangles") {
  auto r = empirical_f(CycleUnionSpec::from_lengths({3, 3}), 7, 300, 42);
  CHECK(r.max_treewidth_minor_free == 4);
  CHECK(r.f_lower == 5);
  CHECK(r.records.back().graph == complete_graph(5));
  CHECK(r.f_lower <= r.theorem_bound);
  CHECK(r.graphs_examined == 33868 + 300);
}

TEST_CASE("reports are deterministic and re-verify") {
  auto spec = CycleUnionSpec::from_lengths({4});
  EmpiricalFOptions opts;
  opts.exhaustive_max_n = 5;
  Json a = report_to_json(empirical_f(spec, 7, 50, 9, opts));
  Json b = report_to_json(empirical_f(spec, 7, 50, 9, opts));
  CHECK(a == b);
  CHECK(verify_report_json(a).empty());
  Json tampered = a;
  tampered["records"][0]["treewidth"] = 7;
  CHECK_FALSE(verify_report_json(tampered).empty());
  Json fake = a;
  fake["records"].push_back(Json{{"graph_id", "fake"},
                                 {"graph", serialize_graph(cycle_graph(4), GraphFormat::EdgeList)},
                                 {"treewidth", 2},
                                 {"outcome", "minor_free"}});
  CHECK_FALSE(verify_report_json(fake).empty());
}

TEST_CASE("guards and fixtures") {
  CHECK_THROWS_AS(empirical_f(CycleUnionSpec::from_lengths({3}), 13, 1, 1), GuardExceeded);
  CHECK(generate_fixture("grid", 4, 0, 0) == grid_graph(4));
  CHECK(generate_fixture("ladder", 5, 2, 0) == ladder_graph(5, 2));
  CHECK(generate_fixture("gnm", 10, 12, 3) == generate_fixture("gnm", 10, 12, 3));
  CHECK(generate_fixture("subcubic", 10, 13, 3).max_degree() <= 3);
  CHECK_THROWS_AS(generate_fixture("torus", 3, 0, 0), PreconditionError);
}

TEST_CASE("trace digest is stable") {
  ExtractionTrace t;
  t.levels.push_back(LevelRecord{0, "base", {{"h", 3}}, {}, {{0, 1, 2}}, {0}, std::nullopt, ""});
  CHECK(trace_digest(t) == trace_digest(t));
  ExtractionTrace u = t;
  u.levels[0].case_taken = "1";
  CHECK(trace_digest(t) != trace_digest(u));
}
