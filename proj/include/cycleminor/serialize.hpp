#pragma once

#include <string>

#include <json.hpp>

#include "cycleminor/bramble.hpp"
#include "cycleminor/cycle_packing.hpp"
#include "cycleminor/extract.hpp"
#include "cycleminor/linkage.hpp"
#include "cycleminor/minor.hpp"
#include "cycleminor/treewidth.hpp"

namespace cycleminor {

using Json = nlohmann::json;

/// {"<pattern vertex>": [host vertices...]}
Json model_to_json(const MinorModel& m);
/// Throws ParseError on malformed input or missing pattern vertices.
MinorModel model_from_json(const Json& j);

/// {"elements": [[v,...],...]}
Json bramble_to_json(const Bramble& b);
Bramble bramble_from_json(const Json& j);

/// {"tree_edges": [[i,j],...], "bags": {"<i>": [v,...]}}
Json decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const Json& j);

Json path_system_to_json(const PathSystem& ps);
PathSystem path_system_from_json(const Json& j);

/// {"cycles": [[v,...],...]}
Json cycle_packing_to_json(const std::vector<Cycle>& cycles);
std::vector<Cycle> cycle_packing_from_json(const Json& j);

/// Debug dump of the contracted graph and its lift table.
Json auxiliary_graph_to_json(const AuxiliaryGraph& aux);

/// Ordered list of {case, budgets, deleted, committed_cycles, inequality1}.
Json trace_to_json(const ExtractionTrace& trace);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace cycleminor
