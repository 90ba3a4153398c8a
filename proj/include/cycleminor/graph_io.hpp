#pragma once

#include <string>
#include <string_view>

#include "cycleminor/graph.hpp"

namespace cycleminor {

enum class GraphFormat { EdgeList, Graph6 };

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GraphFormat parse_format(std::string_view name);

/// Edge-list text: first non-comment line is the vertex count, each further
/// line holds "u v". '#' starts a comment. Loops, duplicates and
/// out-of-range endpoints are rejected with ParseError.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph read_graph_file(const std::string& path, GraphFormat format);

}  // namespace cycleminor
