#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace jrt {

/// A set of vertices over a fixed universe of at most 128 ids, packed into
/// two machine words.  Vertex ids are 0-based.  Ordering is colexicographic
/// on the bit pattern, i.e. comparison of the value as a 128-bit integer
/// with vertex 0 as the least significant bit.
struct VertexSet {
    static constexpr int capacity = 128;

    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> vs) {
        for (int v : vs) set(v);
    }

    static VertexSet from_vertices(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.set(v);
        return s;
    }

    /// The set {0, 1, ..., count-1}.
    static VertexSet prefix(int count) {
        check_range(count == 0 ? 0 : count - 1);
        VertexSet s;
        if (count >= 64) {
            s.lo = ~0ULL;
            s.hi = (count == 128) ? ~0ULL : ((1ULL << (count - 64)) - 1);
        } else if (count > 0) {
            s.lo = (1ULL << count) - 1;
        }
        return s;
    }

    /// The set {from, ..., from+count-1}.
    static VertexSet range(int from, int count) {
        VertexSet s;
        for (int v = from; v < from + count; ++v) s.set(v);
        return s;
    }

    bool test(int v) const {
        check_range(v);
        return v < 64 ? (lo >> v) & 1 : (hi >> (v - 64)) & 1;
    }

    void set(int v) {
        check_range(v);
        if (v < 64) lo |= 1ULL << v; else hi |= 1ULL << (v - 64);
    }

    void reset(int v) {
        check_range(v);
        if (v < 64) lo &= ~(1ULL << v); else hi &= ~(1ULL << (v - 64));
    }

    int count() const { return std::popcount(lo) + std::popcount(hi); }
    bool empty() const { return lo == 0 && hi == 0; }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return make(a.lo & b.lo, a.hi & b.hi); }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return make(a.lo | b.lo, a.hi | b.hi); }
    friend VertexSet operator^(VertexSet a, VertexSet b) { return make(a.lo ^ b.lo, a.hi ^ b.hi); }
    /// Set difference a \ b.
    friend VertexSet operator-(VertexSet a, VertexSet b) { return make(a.lo & ~b.lo, a.hi & ~b.hi); }

    VertexSet& operator&=(VertexSet b) { lo &= b.lo; hi &= b.hi; return *this; }
    VertexSet& operator|=(VertexSet b) { lo |= b.lo; hi |= b.hi; return *this; }
    VertexSet& operator^=(VertexSet b) { lo ^= b.lo; hi ^= b.hi; return *this; }
    VertexSet& operator-=(VertexSet b) { lo &= ~b.lo; hi &= ~b.hi; return *this; }

    bool operator==(const VertexSet&) const = default;

    bool subset_of(VertexSet b) const { return (lo & ~b.lo) == 0 && (hi & ~b.hi) == 0; }
    bool intersects(VertexSet b) const { return (lo & b.lo) != 0 || (hi & b.hi) != 0; }
    int intersection_count(VertexSet b) const {
        return std::popcount(lo & b.lo) + std::popcount(hi & b.hi);
    }

    bool operator<(const VertexSet& b) const { return hi != b.hi ? hi < b.hi : lo < b.lo; }

    /// Smallest vertex id, or -1 when empty.
    int min_vertex() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t w = lo; w;) {
            int v = std::countr_zero(w);
            w &= w - 1;
            f(v);
        }
        for (std::uint64_t w = hi; w;) {
            int v = std::countr_zero(w);
            w &= w - 1;
            f(64 + v);
        }
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

private:
    static VertexSet make(std::uint64_t lo, std::uint64_t hi) {
        VertexSet s;
        s.lo = lo;
        s.hi = hi;
        return s;
    }
    static void check_range(int v) {
        if (v < 0 || v >= capacity)
            throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    }
};

/// Colexicographic order: the 128-bit value comparison with vertex 0 least
/// significant.
inline bool colex_less(const VertexSet& a, const VertexSet& b) { return a < b; }

/// Calls f(subset) for every size-r subset of the given vertex list, in
/// colexicographic order of the resulting bit patterns.
template <typename F>
void for_each_subset_of_size(const std::vector<int>& verts, int r, F&& f) {
    const int n = static_cast<int>(verts.size());
    if (r < 0 || r > n) return;
    if (r == 0) {
        f(VertexSet{});
        return;
    }
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s.set(verts[i]);
        f(s);
        // colex successor of the index combination
        int i = 0;
        while (i < r) {
            int limit = (i + 1 < r) ? idx[i + 1] : n;
            if (idx[i] + 1 < limit) break;
            ++i;
        }
        if (i == r) break;
        ++idx[i];
        for (int j = 0; j < i; ++j) idx[j] = j;
    }
}

/// All subsets of `base` with size at most max_size, including the empty set.
template <typename F>
void for_each_small_subset(const VertexSet& base, int max_size, F&& f) {
    std::vector<int> verts = base.vertices();
    int top = std::min<int>(max_size, static_cast<int>(verts.size()));
    for (int r = 0; r <= top; ++r) for_each_subset_of_size(verts, r, f);
}

}  // namespace jrt

template <>
struct std::hash<jrt::VertexSet> {
    std::size_t operator()(const jrt::VertexSet& s) const {
        std::uint64_t h = s.lo * 0x9e3779b97f4a7c15ULL;
        h ^= s.hi + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
