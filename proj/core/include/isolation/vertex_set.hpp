#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace isolation {

/// A subset of the vertices 0..universe-1, stored as packed 64-bit words.
/// One word covers the whole set for graphs of up to 64 vertices; larger
/// universes spill into further words transparently.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> vertices);

    static VertexSet full(int universe);
    static VertexSet from_vertices(int universe, std::span<const int> vertices);

    int universe() const { return n_; }
    int count() const;
    bool empty() const;

    bool test(int v) const;
    VertexSet& set(int v);
    VertexSet& reset(int v);

    /// Smallest member, or -1 when empty.
    int first() const;
    /// Smallest member strictly greater than `after`, or -1.
    int next(int after) const;

    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within the universe.
    VertexSet complement() const;

    bool operator==(const VertexSet&) const = default;

    std::vector<int> vertices() const;

    template <class F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

private:
    void check_vertex(int v) const;
    void check_universe(const VertexSet& other) const;

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace isolation
