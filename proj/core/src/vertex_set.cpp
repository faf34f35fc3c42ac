#include "isolation/vertex_set.hpp"

#include <bit>
#include <stdexcept>

namespace isolation {

namespace {
constexpr int kWordBits = 64;

int word_count(int universe) { return (universe + kWordBits - 1) / kWordBits; }
}  // namespace

VertexSet::VertexSet(int universe) : n_(universe), w_(word_count(universe), 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> vertices) : VertexSet(universe) {
    for (int v : vertices) set(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (auto& word : s.w_) word = ~std::uint64_t{0};
    if (universe % kWordBits != 0 && !s.w_.empty())
        s.w_.back() >>= kWordBits - universe % kWordBits;
    return s;
}

VertexSet VertexSet::from_vertices(int universe, std::span<const int> vertices) {
    VertexSet s(universe);
    for (int v : vertices) s.set(v);
    return s;
}

void VertexSet::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
}

void VertexSet::check_universe(const VertexSet& other) const {
    if (n_ != other.n_) throw std::invalid_argument("VertexSet: universe mismatch");
}

int VertexSet::count() const {
    int total = 0;
    for (auto word : w_) total += std::popcount(word);
    return total;
}

bool VertexSet::empty() const {
    for (auto word : w_)
        if (word != 0) return false;
    return true;
}

bool VertexSet::test(int v) const {
    check_vertex(v);
    return (w_[v / kWordBits] >> (v % kWordBits)) & 1;
}

VertexSet& VertexSet::set(int v) {
    check_vertex(v);
    w_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
    return *this;
}

VertexSet& VertexSet::reset(int v) {
    check_vertex(v);
    w_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
    return *this;
}

int VertexSet::first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(w_[i]);
    return -1;
}

int VertexSet::next(int after) const {
    int v = after + 1;
    if (v >= n_) return -1;
    std::size_t i = static_cast<std::size_t>(v) / kWordBits;
    std::uint64_t word = w_[i] >> (v % kWordBits);
    if (word != 0) return v + std::countr_zero(word);
    for (++i; i < w_.size(); ++i)
        if (w_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(w_[i]);
    return -1;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & other.w_[i]) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_universe(other);
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~other.w_[i]) return false;
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_universe(other);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other.w_[i];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(n_);
    out -= *this;
    return out;
}

std::vector<int> VertexSet::vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

}  // namespace isolation
