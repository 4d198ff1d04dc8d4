#include "hunt/graph_io.hpp"

#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

#include "hunt/errors.hpp"

namespace hunt {

namespace {

void write_body(std::ostream& os, const Graph& g) {
    os << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

// Parses exactly the listed integers from a data line; trailing junk is an error.
template <typename... Ints>
bool parse_line(const std::string& line, Ints&... out) {
    std::istringstream ss(line);
    ((ss >> out) && ...);
    if (!ss) return false;
    std::string rest;
    return !(ss >> rest);
}

}  // namespace

void write_graph(std::ostream& os, const Graph& g) {
    if (g.grid()) os << "# grid " << g.grid()->rows << ' ' << g.grid()->cols << '\n';
    write_body(os, g);
}

void write_tk(std::ostream& os, const RootedTree& t) {
    os << "# tk " << t.k << " root " << t.root << '\n';
    write_body(os, t.graph);
}

GraphFile read_graph_file(std::istream& is) {
    std::optional<GridShape> grid;
    GraphFile out;
    std::string line;
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    auto fail = [&](const std::string& why) {
        throw InputError("graph file line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string tag;
            ss >> tag;
            if (tag == "grid") {
                int rows = 0, cols = 0;
                if (!(ss >> rows >> cols)) fail("malformed grid comment");
                grid = GridShape{rows, cols};
            } else if (tag == "tk") {
                int k = 0;
                std::string word;
                Vertex root = 0;
                if (!(ss >> k >> word >> root) || word != "root") fail("malformed tk comment");
                out.tk_level = k;
                out.tk_root = root;
            }
            continue;
        }
        if (n < 0) {
            if (!parse_line(line, n, m) || n < 0 || m < 0) fail("expected \"<n> <m>\"");
            if (n > std::numeric_limits<int>::max()) fail("vertex count too large");
            continue;
        }
        long long u = 0, v = 0;
        if (!parse_line(line, u, v)) fail("expected \"<u> <v>\"");
        if (!(0 <= u && u < v && v < n)) fail("edge endpoints must satisfy 0 <= u < v < n");
        if (static_cast<long long>(edges.size()) >= m) fail("more edges than declared");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (n < 0) throw InputError("graph file has no header line");
    if (static_cast<long long>(edges.size()) != m)
        throw InputError("graph file declares " + std::to_string(m) + " edges but lists " +
                         std::to_string(edges.size()));
    out.graph = Graph(static_cast<int>(n), std::move(edges), grid);
    if (out.tk_root) out.graph.check_vertex(*out.tk_root);
    return out;
}

Graph read_graph(std::istream& is) { return read_graph_file(is).graph; }

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file " + path);
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write graph file " + path);
    write_graph(out, g);
}

}  // namespace hunt
