#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jrt/vertex_set.hpp"

namespace jrt {

/// A set system over the universe {0, ..., n-1}.  In canonical form the
/// edge list is sorted colexicographically and duplicate-free.  The edge
/// list may be non-uniform; `uniform` carries the common edge size when
/// the system is k-uniform by construction.
struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> edges;
    std::optional<int> uniform;

    Hypergraph() = default;
    Hypergraph(int n_, std::vector<VertexSet> es, std::optional<int> k = std::nullopt)
        : n(n_), edges(std::move(es)), uniform(k) {
        canonicalize();
        validate();
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    /// Union of all edges.
    VertexSet support() const {
        VertexSet s;
        for (const auto& e : edges) s |= e;
        return s;
    }

    VertexSet universe() const { return VertexSet::prefix(n); }

    bool contains_edge(const VertexSet& e) const {
        return std::binary_search(edges.begin(), edges.end(), e, colex_less);
    }

    void canonicalize() {
        std::sort(edges.begin(), edges.end(), colex_less);
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    bool is_canonical() const {
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (!colex_less(edges[i - 1], edges[i])) return false;
        return true;
    }

    void validate() const {
        if (n < 0 || n > VertexSet::capacity)
            throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
        const VertexSet u = universe();
        for (const auto& e : edges) {
            if (!e.subset_of(u))
                throw std::invalid_argument("edge " + e.str() + " not within universe of size " +
                                            std::to_string(n));
            if (uniform && e.count() != *uniform)
                throw std::invalid_argument("edge " + e.str() + " violates uniformity k=" +
                                            std::to_string(*uniform));
        }
        if (uniform && *uniform >= 1)
            for (const auto& e : edges)
                if (e.empty()) throw std::invalid_argument("empty edge in uniform hypergraph");
    }

    bool operator==(const Hypergraph&) const = default;
};

inline int intersection_size(const VertexSet& a, const VertexSet& b) {
    return a.intersection_count(b);
}

inline int degree(const Hypergraph& h, int v) {
    int d = 0;
    for (const auto& e : h.edges) d += e.test(v);
    return d;
}

inline std::vector<int> degree_sequence(const Hypergraph& h) {
    std::vector<int> deg(h.n, 0);
    for (const auto& e : h.edges) e.for_each([&](int v) { ++deg[v]; });
    return deg;
}

inline int max_degree(const Hypergraph& h) {
    int best = 0;
    for (int d : degree_sequence(h)) best = std::max(best, d);
    return best;
}

/// Edges of h entirely contained in w, over the same universe.
inline Hypergraph induced(const Hypergraph& h, const VertexSet& w) {
    std::vector<VertexSet> kept;
    for (const auto& e : h.edges)
        if (e.subset_of(w)) kept.push_back(e);
    return Hypergraph(h.n, std::move(kept), h.uniform);
}

struct Component {
    VertexSet vertices;
    Hypergraph sub;
};

struct Components {
    std::vector<Component> parts;   // sorted by colex-least edge
    VertexSet isolated;             // vertices in no edge
};

/// Connected components of the edge-overlap graph.  Vertices that lie in no
/// edge are reported separately.
inline Components components(const Hypergraph& h) {
    const int m = h.edge_count();
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto merge = [&](int a, int b) { parent[find(a)] = find(b); };

    std::vector<int> first_edge_at(h.n, -1);
    for (int i = 0; i < m; ++i)
        h.edges[i].for_each([&](int v) {
            if (first_edge_at[v] < 0)
                first_edge_at[v] = i;
            else
                merge(i, first_edge_at[v]);
        });

    std::vector<int> root_to_part(m, -1);
    Components out;
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (root_to_part[r] < 0) {
            root_to_part[r] = static_cast<int>(out.parts.size());
            out.parts.push_back({});
        }
        Component& c = out.parts[root_to_part[r]];
        c.vertices |= h.edges[i];
        c.sub.edges.push_back(h.edges[i]);
    }
    for (auto& c : out.parts) {
        c.sub.n = h.n;
        c.sub.uniform = h.uniform;
        c.sub.canonicalize();
    }
    // edges were scanned in colex order, so parts are already ordered by
    // their colex-least edge
    out.isolated = h.universe() - h.support();
    return out;
}

}  // namespace jrt
