#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hunt/vertex_set.hpp"

namespace hunt {

// Cell of the n x n grid: x is the position inside a row, y the row, both
// 1-based. The even class V1 is { x + y even }, the odd class V2 the rest.
// In make_grid(n, n) the cell is vertex (y-1)*n + (x-1).
struct Point {
    int x;
    int y;
    friend auto operator<=>(const Point&, const Point&) = default;
};

using ClassMask = std::uint64_t;

// Indexing of both colour classes of the n x n grid plus the diagonal and
// row families used by the shiftings. Class members are numbered row by row
// (y, then x), so bit i of a ClassMask is the i-th V1 cell in that order.
class GridClassContext {
public:
    static constexpr int max_side = 11;

    static std::shared_ptr<const GridClassContext> make(int n);

    int n() const noexcept { return n_; }
    int class_size() const noexcept { return static_cast<int>(even_.size()); }
    int odd_size() const noexcept { return static_cast<int>(odd_.size()); }

    bool in_grid(Point p) const noexcept { return p.x >= 1 && p.x <= n_ && p.y >= 1 && p.y <= n_; }
    bool in_class(Point p) const noexcept { return in_grid(p) && (p.x + p.y) % 2 == 0; }

    Point point(int index) const { return even_.at(index); }
    // Position of p in V1, -1 for cells outside the grid or in V2.
    int index(Point p) const noexcept;
    int odd_index(Point p) const noexcept;

    // V2 neighbours of the V1 cell with the given index, as odd-class bits.
    ClassMask neighbours(int index) const { return neighbours_.at(index); }

    // x + y = i, ordered by increasing y.
    std::vector<Point> anti_diagonal(int i) const;
    // x - y = i, ordered by increasing y.
    std::vector<Point> diagonal(int i) const;
    // V1 cells of row y, ordered by increasing x.
    std::vector<Point> row_even(int y) const;
    // V2 cells of row y, ordered by increasing x.
    std::vector<Point> row_odd(int y) const;

    // |anti_diagonal(i)|, |diagonal(i)|, |row_even(i)| in closed form.
    int anti_diagonal_size(int i) const noexcept;
    int diagonal_size(int i) const noexcept;
    int row_even_size(int y) const noexcept;

    ClassMask mask_of(const std::vector<Point>& cells) const;

    explicit GridClassContext(int n);

private:
    int n_;
    std::vector<Point> even_;
    std::vector<Point> odd_;
    std::vector<ClassMask> neighbours_;
};

using ContextPtr = std::shared_ptr<const GridClassContext>;

// Subset Q of V1 of the n x n grid.
class ClassSubset {
public:
    ClassSubset(ContextPtr ctx, ClassMask mask);
    ClassSubset(ContextPtr ctx, const std::vector<Point>& cells);

    const GridClassContext& context() const noexcept { return *ctx_; }
    const ContextPtr& context_ptr() const noexcept { return ctx_; }
    ClassMask mask() const noexcept { return mask_; }

    int size() const noexcept;
    bool contains(Point p) const noexcept;
    std::vector<Point> points() const;
    // Same cells as vertices of make_grid(n, n).
    VertexSet to_grid_set() const;

    friend bool operator==(const ClassSubset& a, const ClassSubset& b) {
        return a.ctx_->n() == b.ctx_->n() && a.mask_ == b.mask_;
    }

private:
    ContextPtr ctx_;
    ClassMask mask_;
};

// |N(Q)| in the grid.
int delta(const ClassSubset& q);

// Per diagonal family, keep each diagonal's occupancy count but move the
// members to the lowest rows. Size is preserved and delta never increases.
ClassSubset shift_down_right(const ClassSubset& q);
ClassSubset shift_down_left(const ClassSubset& q);

bool is_pyramidal(const ClassSubset& q);
bool is_left_pyramidal(const ClassSubset& q);
bool is_right_pyramidal(const ClassSubset& q);

// Highest row holding the first (last) column cell of Q, 0 if none.
int top_on_left_edge(const ClassSubset& q);
int top_on_right_edge(const ClassSubset& q);

// Row-wise compaction towards x = 1 (left) or x = n (right). Need a
// pyramidal q with top_on_left_edge >= top_on_right_edge (left) or <= (right);
// PreconditionError otherwise.
ClassSubset shift_left(const ClassSubset& q);
ClassSubset shift_right(const ClassSubset& q);

// |Q| - |Q in top row| + |N(Q in row 1) in row 1|; equals delta(q) for
// pyramidal q. PreconditionError when q is not pyramidal.
int pyramidal_boundary_formula(const ClassSubset& q);

// Cells (x, y) of Q whose up-left (x-1, y+1) (resp. up-right (x+1, y+1))
// neighbour on the diagonal is a grid cell missing from Q, sorted by x.
std::vector<Point> left_spots(const ClassSubset& q);
std::vector<Point> right_spots(const ClassSubset& q);

// Removes the spot of largest (left) / smallest (right) x and fills the
// diagonal cell above the spot of smallest (left) / largest (right) x.
// Needs a left- (right-) pyramidal q with at least two spots.
ClassSubset spot_move_left(const ClassSubset& q);
ClassSubset spot_move_right(const ClassSubset& q);

// First p cells of V1 listed anti-diagonal by anti-diagonal (x + y = 2, 4,
// ..., 2n), each by increasing y.
ClassSubset extremal_z(const ContextPtr& ctx, int p);
// First p cells of V1 listed diagonal by diagonal (x - y from the largest
// even value down to the smallest), each by increasing y.
ClassSubset extremal_z_prime(const ContextPtr& ctx, int p);

struct MinDelta {
    int p = 0;
    int value = 0;
    // Lexicographically smallest minimiser.
    ClassMask argmin = 0;
};

// Largest side for which V1 is enumerated exhaustively.
inline constexpr int max_bruteforce_side = 6;

// Minimum of delta over all subsets of V1 with exactly p cells.
MinDelta min_delta_bruteforce(int n, int p);
// min_delta_bruteforce(n, p) for p = 0..|V1| from a single enumeration.
std::vector<MinDelta> min_delta_table(int n);

}  // namespace hunt
