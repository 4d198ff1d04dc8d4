#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "hunt/graph.hpp"
#include "hunt/tree_family.hpp"

namespace hunt {

// Text format:
//   # comment lines (anywhere)
//   <n> <m>
//   <u> <v>        m lines, 0 <= u < v < n
// "# grid <rows> <cols>" restores grid coordinates; "# tk <k> root <r>"
// marks a member of the T_k family.
struct GraphFile {
    Graph graph;
    std::optional<int> tk_level;
    std::optional<Vertex> tk_root;
};

void write_graph(std::ostream& os, const Graph& g);
void write_tk(std::ostream& os, const RootedTree& t);

GraphFile read_graph_file(std::istream& is);
Graph read_graph(std::istream& is);

Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

}  // namespace hunt
