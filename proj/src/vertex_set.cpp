#include "hunt/vertex_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hunt/errors.hpp"

namespace hunt {

VertexSet::const_iterator::const_iterator(const std::uint64_t* words, std::size_t count,
                                          std::size_t index)
    : words_(words), count_(count), index_(index) {
    if (index_ < count_) {
        current_ = words_[index_];
        settle();
    }
}

void VertexSet::const_iterator::settle() {
    while (current_ == 0) {
        ++index_;
        if (index_ >= count_) {
            index_ = count_;
            return;
        }
        current_ = words_[index_];
    }
}

VertexSet::const_iterator& VertexSet::const_iterator::operator++() {
    current_ &= current_ - 1;
    settle();
    return *this;
}

VertexSet::VertexSet(std::initializer_list<Vertex> vertices) {
    for (Vertex v : vertices) insert(v);
}

VertexSet::VertexSet(std::span<const Vertex> vertices) {
    for (Vertex v : vertices) insert(v);
}

VertexSet VertexSet::full(int n) {
    VertexSet s;
    if (n <= 0) return s;
    s.words_.assign((static_cast<std::size_t>(n) + 63) / 64, ~std::uint64_t{0});
    if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v < 0) throw InputError("negative vertex index " + std::to_string(v));
    auto w = static_cast<std::size_t>(v) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    if (v < 0) return;
    auto w = static_cast<std::size_t>(v) / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (v % 64));
    trim();
}

bool VertexSet::contains(Vertex v) const noexcept {
    if (v < 0) return false;
    auto w = static_cast<std::size_t>(v) / 64;
    return w < words_.size() && ((words_[w] >> (v % 64)) & 1U);
}

std::size_t VertexSet::size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

int VertexSet::bound() const noexcept {
    if (words_.empty()) return 0;
    return static_cast<int>((words_.size() - 1) * 64 + 64 - std::countl_zero(words_.back()));
}

Vertex VertexSet::min() const {
    if (words_.empty()) throw InputError("min() of empty vertex set");
    return *begin();
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    if (words_.size() > other.words_.size()) return false;
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    trim();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    auto n = std::min(words_.size(), other.words_.size());
    for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
    trim();
    return *this;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

void VertexSet::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ea = a.end();
    auto ib = b.begin(), eb = b.end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == ea && ib != eb;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    bool first = true;
    for (Vertex v : s) {
        if (!first) os << ", ";
        os << v;
        first = false;
    }
    return os << '}';
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : s.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace hunt
