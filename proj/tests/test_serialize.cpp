#include <doctest.h>

#include <filesystem>

#include "cycleminor/graph_io.hpp"
#include "cycleminor/serialize.hpp"

using namespace cycleminor;

TEST_CASE("minor model JSON") {
  MinorModel m{{{0}, {1, 2}, {5}}};
  Json j = model_to_json(m);
  CHECK(j.dump() == R"({"0":[0],"1":[1,2],"2":[5]})");
  CHECK(model_from_json(j).branch_sets == m.branch_sets);
  CHECK_THROWS_AS(model_from_json(Json::parse(R"({"0":[0],"2":[1]})")), ParseError);
  CHECK_THROWS_AS(model_from_json(Json::parse(R"({"0":["a"]})")), ParseError);
  CHECK_THROWS_AS(model_from_json(Json::parse("[1]")), ParseError);
}

TEST_CASE("bramble and decomposition JSON") {
  Bramble b = grid_cross_bramble(4);
  Json bj = bramble_to_json(b);
  CHECK(bj.contains("elements"));
  CHECK(bramble_from_json(bj).elements == b.elements);
  CHECK_THROWS_AS(bramble_from_json(Json::object()), ParseError);

  Graph g = grid_graph(3);
  TreewidthResult tw = exact_treewidth(g);
  Json tj = decomposition_to_json(tw.decomposition);
  CHECK(tj.at("bags").is_object());
  TreeDecomposition back = decomposition_from_json(tj);
  CHECK(back.bags == tw.decomposition.bags);
  CHECK(back.tree_edges == tw.decomposition.tree_edges);
  CHECK(verify_tree_decomposition(g, back).ok);
}

TEST_CASE("path system, packing and trace JSON") {
  Graph g = complete_graph(7);
  PathSystem ps = path_partition(g, singleton_bramble({0, 1, 2, 3, 4, 5, 6}), 3);
  PathSystem back = path_system_from_json(path_system_to_json(ps));
  CHECK(back.p1 == ps.p1);
  CHECK(back.links == ps.links);
  CHECK(back.p2_witness.hitting_set == ps.p2_witness.hitting_set);
  CHECK(verify_path_system(g, back).ok);

  std::vector<Cycle> cycles{{0, 1, 2}, {3, 4, 5}};
  CHECK(cycle_packing_from_json(cycle_packing_to_json(cycles)) == cycles);

  auto packing = cycles_from_linkage(ladder_graph(4), PathSystem{{0, 1, 2, 3}, {4, 5, 6, 7}, {{0, 4}, {1, 5}, {2, 6}, {3, 7}}, 4, {}, {}}, 1);
  Json aux = auxiliary_graph_to_json(packing.aux);
  CHECK(aux.at("edges").size() == 3 + 3 + 4);
  CHECK(aux.at("lift").size() == 10);

  ExtractionTrace trace;
  LevelRecord rec;
  rec.case_taken = "2.2";
  rec.budgets = {{"a", 152}};
  rec.deleted = {1, 2};
  rec.committed_cycles = {{1, 2, 3}};
  rec.inequality1 = Inequality1{10.0, 5.0};
  trace.levels.push_back(rec);
  Json tj = trace_to_json(trace);
  REQUIRE(tj.is_array());
  CHECK(tj[0].at("case") == "2.2");
  CHECK(tj[0].at("budgets").at("a") == 152);
  CHECK(tj[0].at("inequality1").at("lhs") == 10.0);
  CHECK(tj[0].at("committed_cycles")[0] == Json::array({1, 2, 3}));
}

TEST_CASE("JSON files") {
  const auto path = (std::filesystem::temp_directory_path() / "cycleminor_serialize_test.json").string();
  write_json_file(path, bramble_to_json(grid_cross_bramble(3)));
  CHECK(bramble_from_json(read_json_file(path)).elements == grid_cross_bramble(3).elements);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_json_file(path), ParseError);
}
