#include "cycleminor/serialize.hpp"

#include <fstream>

#include "cycleminor/graph_io.hpp"

namespace cycleminor {

namespace {

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + ": expected integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::vector<int>> int_lists(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of arrays");
  std::vector<std::vector<int>> out;
  for (const auto& x : j) out.push_back(int_list(x, what));
  return out;
}

// Object keyed by "0".."k-1", returned in key order.
std::vector<std::vector<int>> indexed_lists(const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + ": expected an object");
  std::vector<std::vector<int>> out(j.size());
  std::vector<char> seen(j.size(), 0);
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    long idx = -1;
    try {
      idx = std::stol(key, &used);
    } catch (const std::exception&) {
    }
    if (used != key.size() || idx < 0 || idx >= static_cast<long>(out.size()) || seen[idx]) {
      throw ParseError(std::string(what) + ": keys must be 0..k-1");
    }
    seen[idx] = 1;
    out[idx] = int_list(value, what);
  }
  return out;
}

Json indexed_object(const std::vector<VertexSet>& sets) {
  Json j = Json::object();
  for (std::size_t i = 0; i < sets.size(); ++i) j[std::to_string(i)] = sets[i];
  return j;
}

Json order_to_json(const BrambleOrder& o) { return Json{{"order", o.order}, {"hitting_set", o.hitting_set}}; }

BrambleOrder order_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order")) throw ParseError("witness: missing order");
  BrambleOrder o;
  o.order = j.at("order").get<int>();
  o.hitting_set = int_list(j.value("hitting_set", Json::array()), "hitting_set");
  return o;
}

}  // namespace

Json model_to_json(const MinorModel& m) { return indexed_object(m.branch_sets); }

MinorModel model_from_json(const Json& j) {
  MinorModel m;
  for (auto& s : indexed_lists(j, "minor model")) m.branch_sets.push_back(make_vertex_set(std::move(s)));
  return m;
}

Json bramble_to_json(const Bramble& b) { return Json{{"elements", b.elements}}; }

Bramble bramble_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements")) throw ParseError("bramble: missing \"elements\"");
  Bramble b;
  for (auto& e : int_lists(j.at("elements"), "bramble elements")) b.elements.push_back(make_vertex_set(std::move(e)));
  return b;
}

Json decomposition_to_json(const TreeDecomposition& td) {
  Json edges = Json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
  return Json{{"tree_edges", edges}, {"bags", indexed_object(td.bags)}};
}

TreeDecomposition decomposition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("bags") || !j.contains("tree_edges")) {
    throw ParseError("tree decomposition: needs \"bags\" and \"tree_edges\"");
  }
  TreeDecomposition td;
  for (auto& bag : indexed_lists(j.at("bags"), "bags")) td.bags.push_back(make_vertex_set(std::move(bag)));
  for (const auto& e : int_lists(j.at("tree_edges"), "tree_edges")) {
    if (e.size() != 2) throw ParseError("tree_edges: each edge needs two endpoints");
    td.tree_edges.emplace_back(e[0], e[1]);
  }
  return td;
}

Json path_system_to_json(const PathSystem& ps) {
  return Json{{"t", ps.t},
              {"p1", ps.p1},
              {"p2", ps.p2},
              {"links", ps.links},
              {"p1_witness", order_to_json(ps.p1_witness)},
              {"p2_witness", order_to_json(ps.p2_witness)}};
}

PathSystem path_system_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("path system: expected an object");
  PathSystem ps;
  try {
    ps.t = j.at("t").get<int>();
    ps.p1 = int_list(j.at("p1"), "p1");
    ps.p2 = int_list(j.at("p2"), "p2");
    ps.links = int_lists(j.at("links"), "links");
    ps.p1_witness = order_from_json(j.at("p1_witness"));
    ps.p2_witness = order_from_json(j.at("p2_witness"));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("path system: ") + e.what());
  }
  return ps;
}

Json cycle_packing_to_json(const std::vector<Cycle>& cycles) { return Json{{"cycles", cycles}}; }

std::vector<Cycle> cycle_packing_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cycles")) throw ParseError("cycle packing: missing \"cycles\"");
  return int_lists(j.at("cycles"), "cycles");
}

Json auxiliary_graph_to_json(const AuxiliaryGraph& aux) {
  Json edges = Json::array();
  for (auto [a, b] : aux.j.edges) edges.push_back({a, b});
  return Json{{"vertices", aux.j.n},     {"edges", edges},           {"host", aux.host},
              {"lift", aux.lift},        {"p1_edges", aux.p1_edges}, {"p2_edges", aux.p2_edges},
              {"link_edges", aux.link_edges}};
}

Json trace_to_json(const ExtractionTrace& trace) {
  Json out = Json::array();
  for (const LevelRecord& rec : trace.levels) {
    Json budgets = Json::object();
    for (const auto& [name, value] : rec.budgets) budgets[name] = value;
    Json item{{"level", rec.level},
              {"case", rec.case_taken},
              {"budgets", budgets},
              {"deleted", rec.deleted},
              {"committed_cycles", rec.committed_cycles},
              {"committed_components", rec.committed_components}};
    if (rec.inequality1) {
      item["inequality1"] = Json{{"lhs", rec.inequality1->lhs}, {"rhs", rec.inequality1->rhs}};
    } else {
      item["inequality1"] = nullptr;
    }
    if (!rec.note.empty()) item["note"] = rec.note;
    out.push_back(std::move(item));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace cycleminor
