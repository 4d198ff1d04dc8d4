#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace hunt {

using Vertex = int;

// Set of vertex indices stored as a growable bitset. The word vector never
// carries trailing zero words, so two sets compare equal iff they hold the
// same elements, independent of how they were built.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const std::uint64_t* words, std::size_t count, std::size_t index);

        Vertex operator*() const {
            return static_cast<Vertex>(index_ * 64 + std::countr_zero(current_));
        }
        const_iterator& operator++();
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        bool operator==(const const_iterator& other) const {
            return index_ == other.index_ && current_ == other.current_;
        }

    private:
        void settle();

        const std::uint64_t* words_ = nullptr;
        std::size_t count_ = 0;
        std::size_t index_ = 0;
        std::uint64_t current_ = 0;
    };

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vertices);
    explicit VertexSet(std::span<const Vertex> vertices);

    // {0, 1, ..., n-1}
    static VertexSet full(int n);

    void insert(Vertex v);
    void erase(Vertex v);
    bool contains(Vertex v) const noexcept;

    std::size_t size() const noexcept;
    bool empty() const noexcept { return words_.empty(); }
    // One past the largest element, 0 when empty.
    int bound() const noexcept;
    Vertex min() const;

    bool is_subset_of(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
    const_iterator end() const { return {words_.data(), words_.size(), words_.size()}; }

    std::vector<Vertex> to_vector() const;
    std::string to_string() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

private:
    void trim();

    std::vector<std::uint64_t> words_;
};

// Lexicographic order of the ascending element lists.
bool lex_less(const VertexSet& a, const VertexSet& b);

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace hunt
