#include "hunt/isoperimetry.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "hunt/errors.hpp"

namespace hunt {

namespace {

ClassMask bit(int i) { return ClassMask{1} << i; }

}  // namespace

GridClassContext::GridClassContext(int n) : n_(n) {
    if (n < 2 || n > max_side)
        throw InputError("grid side must lie in [2, " + std::to_string(max_side) + "], got " +
                         std::to_string(n));
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x) ((x + y) % 2 == 0 ? even_ : odd_).push_back({x, y});
    neighbours_.resize(even_.size(), 0);
    for (std::size_t i = 0; i < even_.size(); ++i) {
        auto [x, y] = even_[i];
        for (Point p : {Point{x - 1, y}, Point{x + 1, y}, Point{x, y - 1}, Point{x, y + 1}})
            if (int j = odd_index(p); j >= 0) neighbours_[i] |= bit(j);
    }
}

std::shared_ptr<const GridClassContext> GridClassContext::make(int n) {
    return std::make_shared<const GridClassContext>(n);
}

// Row y holds ceil(n/2) or floor(n/2) class cells depending on parity, so
// positions follow from counting whole rows before it.
int GridClassContext::index(Point p) const noexcept {
    if (!in_class(p)) return -1;
    int before = 0;
    for (int y = 1; y < p.y; ++y) before += row_even_size(y);
    return before + (p.x - 1) / 2;
}

int GridClassContext::odd_index(Point p) const noexcept {
    if (!in_grid(p) || (p.x + p.y) % 2 == 0) return -1;
    int before = 0;
    for (int y = 1; y < p.y; ++y) before += n_ - row_even_size(y);
    return before + (p.x - 1) / 2;
}

std::vector<Point> GridClassContext::anti_diagonal(int i) const {
    std::vector<Point> out;
    for (int y = std::max(1, i - n_); y <= std::min(n_, i - 1); ++y) out.push_back({i - y, y});
    return out;
}

std::vector<Point> GridClassContext::diagonal(int i) const {
    std::vector<Point> out;
    for (int y = std::max(1, 1 - i); y <= std::min(n_, n_ - i); ++y) out.push_back({y + i, y});
    return out;
}

std::vector<Point> GridClassContext::row_even(int y) const {
    std::vector<Point> out;
    if (y < 1 || y > n_) return out;
    for (int x = (y % 2 == 0) ? 2 : 1; x <= n_; x += 2) out.push_back({x, y});
    return out;
}

std::vector<Point> GridClassContext::row_odd(int y) const {
    std::vector<Point> out;
    if (y < 1 || y > n_) return out;
    for (int x = (y % 2 == 0) ? 1 : 2; x <= n_; x += 2) out.push_back({x, y});
    return out;
}

int GridClassContext::anti_diagonal_size(int i) const noexcept {
    if (i < 2 || i > 2 * n_) return 0;
    return i <= n_ + 1 ? i - 1 : 2 * n_ - i + 1;
}

int GridClassContext::diagonal_size(int i) const noexcept {
    return std::abs(i) >= n_ ? 0 : n_ - std::abs(i);
}

int GridClassContext::row_even_size(int y) const noexcept {
    if (y < 1 || y > n_) return 0;
    return y % 2 == 0 ? n_ / 2 : (n_ + 1) / 2;
}

ClassMask GridClassContext::mask_of(const std::vector<Point>& cells) const {
    ClassMask m = 0;
    for (Point p : cells) {
        int i = index(p);
        if (i < 0)
            throw InputError("cell (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                             ") is not in the even class");
        m |= bit(i);
    }
    return m;
}

ClassSubset::ClassSubset(ContextPtr ctx, ClassMask mask) : ctx_(std::move(ctx)), mask_(mask) {
    if (!ctx_) throw InputError("class subset needs a context");
    if (ctx_->class_size() < 64 && (mask_ >> ctx_->class_size()) != 0)
        throw InputError("mask has bits beyond the even class");
}

ClassSubset::ClassSubset(ContextPtr ctx, const std::vector<Point>& cells)
    : ClassSubset(ctx, ctx ? ctx->mask_of(cells) : 0) {}

int ClassSubset::size() const noexcept { return std::popcount(mask_); }

bool ClassSubset::contains(Point p) const noexcept {
    int i = ctx_->index(p);
    return i >= 0 && (mask_ & bit(i));
}

std::vector<Point> ClassSubset::points() const {
    std::vector<Point> out;
    for (ClassMask m = mask_; m; m &= m - 1) out.push_back(ctx_->point(std::countr_zero(m)));
    return out;
}

VertexSet ClassSubset::to_grid_set() const {
    VertexSet s;
    for (Point p : points()) s.insert((p.y - 1) * ctx_->n() + (p.x - 1));
    return s;
}

int delta(const ClassSubset& q) {
    ClassMask boundary = 0;
    for (ClassMask m = q.mask(); m; m &= m - 1) boundary |= q.context().neighbours(std::countr_zero(m));
    return std::popcount(boundary);
}

namespace {

// Keep the occupancy of each line but move it to the line's first cells.
ClassMask compact_front(const ClassSubset& q, const std::vector<Point>& line) {
    const auto& ctx = q.context();
    int r = 0;
    for (Point p : line) r += q.contains(p);
    ClassMask out = 0;
    for (int j = 0; j < r; ++j) out |= bit(ctx.index(line[j]));
    return out;
}

ClassMask compact_back(const ClassSubset& q, const std::vector<Point>& line) {
    const auto& ctx = q.context();
    int r = 0;
    for (Point p : line) r += q.contains(p);
    ClassMask out = 0;
    for (int j = 0; j < r; ++j) out |= bit(ctx.index(line[line.size() - 1 - j]));
    return out;
}

}  // namespace

ClassSubset shift_down_right(const ClassSubset& q) {
    const auto& ctx = q.context();
    ClassMask out = 0;
    for (int i = 2; i <= 2 * ctx.n(); i += 2) out |= compact_front(q, ctx.anti_diagonal(i));
    return {q.context_ptr(), out};
}

ClassSubset shift_down_left(const ClassSubset& q) {
    const auto& ctx = q.context();
    ClassMask out = 0;
    for (int i = 1 - ctx.n(); i <= ctx.n() - 1; ++i)
        if (i % 2 == 0) out |= compact_front(q, ctx.diagonal(i));
    return {q.context_ptr(), out};
}

bool is_pyramidal(const ClassSubset& q) {
    const int n = q.context().n();
    for (Point p : q.points()) {
        if (p.y < 2) continue;
        if (p.x >= 2 && !q.contains({p.x - 1, p.y - 1})) return false;
        if (p.x <= n - 1 && !q.contains({p.x + 1, p.y - 1})) return false;
    }
    return true;
}

bool is_left_pyramidal(const ClassSubset& q) {
    if (!is_pyramidal(q)) return false;
    for (Point p : q.points())
        if (p.x >= 3 && !q.contains({p.x - 2, p.y})) return false;
    return true;
}

bool is_right_pyramidal(const ClassSubset& q) {
    if (!is_pyramidal(q)) return false;
    const int n = q.context().n();
    for (Point p : q.points())
        if (p.x <= n - 2 && !q.contains({p.x + 2, p.y})) return false;
    return true;
}

int top_on_left_edge(const ClassSubset& q) {
    int top = 0;
    for (Point p : q.points())
        if (p.x == 1) top = std::max(top, p.y);
    return top;
}

int top_on_right_edge(const ClassSubset& q) {
    int top = 0;
    for (Point p : q.points())
        if (p.x == q.context().n()) top = std::max(top, p.y);
    return top;
}

ClassSubset shift_left(const ClassSubset& q) {
    if (!is_pyramidal(q)) throw PreconditionError("left shifting needs a pyramidal set");
    if (top_on_left_edge(q) < top_on_right_edge(q))
        throw PreconditionError("left shifting needs the left edge to reach at least as high as the right edge");
    const auto& ctx = q.context();
    ClassMask out = 0;
    for (int y = 1; y <= ctx.n(); ++y) out |= compact_front(q, ctx.row_even(y));
    return {q.context_ptr(), out};
}

ClassSubset shift_right(const ClassSubset& q) {
    if (!is_pyramidal(q)) throw PreconditionError("right shifting needs a pyramidal set");
    if (top_on_left_edge(q) > top_on_right_edge(q))
        throw PreconditionError("right shifting needs the right edge to reach at least as high as the left edge");
    const auto& ctx = q.context();
    ClassMask out = 0;
    for (int y = 1; y <= ctx.n(); ++y) out |= compact_back(q, ctx.row_even(y));
    return {q.context_ptr(), out};
}

int pyramidal_boundary_formula(const ClassSubset& q) {
    if (!is_pyramidal(q)) throw PreconditionError("boundary formula needs a pyramidal set");
    const auto& ctx = q.context();
    const int n = ctx.n();
    int top_row = 0;
    for (Point p : ctx.row_even(n)) top_row += q.contains(p);
    int bottom_boundary = 0;
    for (Point b : ctx.row_odd(1))
        if (q.contains({b.x - 1, 1}) || q.contains({b.x + 1, 1})) ++bottom_boundary;
    return q.size() - top_row + bottom_boundary;
}

namespace {

std::vector<Point> spots(const ClassSubset& q, int dx) {
    std::vector<Point> out;
    for (Point p : q.points()) {
        Point above{p.x + dx, p.y + 1};
        if (q.context().in_grid(above) && !q.contains(above)) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](Point a, Point b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    return out;
}

void require_distinct_x(const std::vector<Point>& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].x == s[i - 1].x) throw ConstructionError("two spots share an x-coordinate");
}

}  // namespace

std::vector<Point> left_spots(const ClassSubset& q) { return spots(q, -1); }
std::vector<Point> right_spots(const ClassSubset& q) { return spots(q, +1); }

ClassSubset spot_move_left(const ClassSubset& q) {
    if (!is_left_pyramidal(q)) throw PreconditionError("left spot move needs a left-pyramidal set");
    auto s = left_spots(q);
    if (s.size() < 2) throw PreconditionError("left spot move needs at least two left spots");
    require_distinct_x(s);
    const auto& ctx = q.context();
    Point removed = s.back();
    Point added{s.front().x - 1, s.front().y + 1};
    return {q.context_ptr(), (q.mask() & ~bit(ctx.index(removed))) | bit(ctx.index(added))};
}

ClassSubset spot_move_right(const ClassSubset& q) {
    if (!is_right_pyramidal(q)) throw PreconditionError("right spot move needs a right-pyramidal set");
    auto s = right_spots(q);
    if (s.size() < 2) throw PreconditionError("right spot move needs at least two right spots");
    require_distinct_x(s);
    const auto& ctx = q.context();
    Point removed = s.front();
    Point added{s.back().x + 1, s.back().y + 1};
    return {q.context_ptr(), (q.mask() & ~bit(ctx.index(removed))) | bit(ctx.index(added))};
}

namespace {

ClassSubset prefix(const ContextPtr& ctx, const std::vector<Point>& order, int p) {
    if (p < 1 || p > ctx->class_size())
        throw InputError("p must lie in [1, " + std::to_string(ctx->class_size()) + "], got " +
                         std::to_string(p));
    return {ctx, std::vector<Point>(order.begin(), order.begin() + p)};
}

}  // namespace

ClassSubset extremal_z(const ContextPtr& ctx, int p) {
    std::vector<Point> order;
    for (int i = 2; i <= 2 * ctx->n(); i += 2)
        for (Point c : ctx->anti_diagonal(i)) order.push_back(c);
    return prefix(ctx, order, p);
}

ClassSubset extremal_z_prime(const ContextPtr& ctx, int p) {
    std::vector<Point> order;
    const int top = 2 * ((ctx->n() + 1) / 2) - 2;
    for (int i = top; i >= -top; i -= 2)
        for (Point c : ctx->diagonal(i)) order.push_back(c);
    return prefix(ctx, order, p);
}

std::vector<MinDelta> min_delta_table(int n) {
    if (n > max_bruteforce_side)
        throw ResourceError("exhaustive enumeration is limited to n <= " +
                            std::to_string(max_bruteforce_side) + ", got " + std::to_string(n));
    auto ctx = GridClassContext::make(n);
    const int size = ctx->class_size();
    const std::size_t total = std::size_t{1} << size;

    std::vector<ClassMask> boundary(total, 0);
    std::vector<MinDelta> best(size + 1);
    std::vector<bool> seen(size + 1, false);
    for (int p = 0; p <= size; ++p) best[p].p = p;
    for (std::size_t m = 0; m < total; ++m) {
        if (m != 0) boundary[m] = boundary[m & (m - 1)] | ctx->neighbours(std::countr_zero(m));
        const int p = std::popcount(m);
        const int value = std::popcount(boundary[m]);
        auto& b = best[p];
        // Equal sizes: a is lex-smaller iff the lowest differing element is in a.
        const bool lex_smaller = seen[p] && (m & ~b.argmin & ((m ^ b.argmin) & (~(m ^ b.argmin) + 1)));
        if (!seen[p] || value < b.value || (value == b.value && lex_smaller)) {
            b.value = value;
            b.argmin = m;
            seen[p] = true;
        }
    }
    return best;
}

MinDelta min_delta_bruteforce(int n, int p) {
    if (n >= 2 && n <= max_bruteforce_side) {
        const int size = (n * n + 1) / 2;
        if (p < 0 || p > size)
            throw InputError("p must lie in [0, " + std::to_string(size) + "], got " + std::to_string(p));
    }
    return min_delta_table(n).at(p);
}

}  // namespace hunt
