#include "hunt/path_decomposition.hpp"

#include <algorithm>

#include "hunt/errors.hpp"

namespace hunt {

int PathDecomposition::width() const {
    std::size_t widest = 0;
    for (const auto& bag : bags) widest = std::max(widest, bag.size());
    return static_cast<int>(widest) - 1;
}

std::optional<std::string> path_decomposition_defect(const Graph& g, const PathDecomposition& d) {
    const int n = g.order();
    std::vector<int> first(n, -1), last(n, -1), count(n, 0);
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        if (d.bags[i].bound() > n)
            return "bag " + std::to_string(i) + " holds a vertex outside the graph";
        for (Vertex v : d.bags[i]) {
            if (first[v] < 0) first[v] = static_cast<int>(i);
            last[v] = static_cast<int>(i);
            ++count[v];
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (first[v] < 0) return "vertex " + std::to_string(v) + " is in no bag";
    for (Vertex v = 0; v < n; ++v)
        if (count[v] != last[v] - first[v] + 1)
            return "bags containing vertex " + std::to_string(v) + " are not contiguous";
    for (const auto& e : g.edges()) {
        // With contiguous intervals, an edge fits in some bag iff the intervals overlap.
        if (std::max(first[e.u], first[e.v]) > std::min(last[e.u], last[e.v]))
            return "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                   ") is in no bag";
    }
    return std::nullopt;
}

void validate_path_decomposition(const Graph& g, const PathDecomposition& d) {
    if (auto defect = path_decomposition_defect(g, d))
        throw InputError("invalid path decomposition: " + *defect);
}

namespace {

class CentroidDecomposer {
public:
    explicit CentroidDecomposer(const Graph& t)
        : t_(t), removed_(t.order(), false), size_(t.order(), 0), parent_(t.order(), -1) {}

    std::vector<std::vector<Vertex>> decompose(Vertex start) {
        Vertex c = centroid(start);
        removed_[c] = true;

        std::vector<std::pair<Vertex, Vertex>> pieces;  // (min vertex, entry vertex)
        for (Vertex w : t_.neighbors(c))
            if (!removed_[w]) pieces.emplace_back(min_in_piece(w), w);
        std::sort(pieces.begin(), pieces.end());

        std::vector<std::vector<Vertex>> bags;
        for (const auto& piece : pieces) {
            auto sub = decompose(piece.second);
            for (auto& bag : sub) bags.push_back(std::move(bag));
        }
        if (bags.empty()) bags.emplace_back();
        for (auto& bag : bags) bag.push_back(c);
        return bags;
    }

private:
    // Iterative DFS order over the live piece containing start.
    const std::vector<Vertex>& collect(Vertex start) {
        order_.clear();
        parent_[start] = -1;
        order_.push_back(start);
        for (std::size_t i = 0; i < order_.size(); ++i) {
            Vertex v = order_[i];
            for (Vertex w : t_.neighbors(v)) {
                if (removed_[w] || w == parent_[v]) continue;
                parent_[w] = v;
                order_.push_back(w);
            }
        }
        return order_;
    }

    Vertex min_in_piece(Vertex start) {
        const auto& piece = collect(start);
        return *std::min_element(piece.begin(), piece.end());
    }

    Vertex centroid(Vertex start) {
        const auto& piece = collect(start);
        const int total = static_cast<int>(piece.size());
        for (auto it = piece.rbegin(); it != piece.rend(); ++it) {
            size_[*it] = 1;
            for (Vertex w : t_.neighbors(*it))
                if (!removed_[w] && w != parent_[*it]) size_[*it] += size_[w];
        }
        Vertex best = -1;
        int best_load = total + 1;
        for (Vertex v : piece) {
            int load = total - size_[v];
            for (Vertex w : t_.neighbors(v))
                if (!removed_[w] && w != parent_[v]) load = std::max(load, size_[w]);
            if (load < best_load || (load == best_load && v < best)) {
                best = v;
                best_load = load;
            }
        }
        return best;
    }

    const Graph& t_;
    std::vector<bool> removed_;
    std::vector<int> size_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> order_;
};

}  // namespace

PathDecomposition centroid_path_decomposition(const Graph& t) {
    if (!is_tree(t)) throw InputError("centroid path decomposition needs a tree");
    CentroidDecomposer decomposer(t);
    PathDecomposition d;
    for (auto& bag : decomposer.decompose(0)) d.bags.emplace_back(std::span<const Vertex>(bag));
    return d;
}

}  // namespace hunt
