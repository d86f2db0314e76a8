#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "jrt/hypergraph.hpp"

namespace jrt {

/// Parameters of the intersection-constrained family: k-uniform hypergraphs
/// with k = r*t^2 whose pairwise edge intersections all have a size s with
/// t | s or s >= r*t*(t-1).
struct JrtParams {
    int r;
    int t;

    JrtParams(int r_, int t_) : r(r_), t(t_) {
        if (r < 1) throw std::invalid_argument("r must be >= 1");
        if (t < 2) throw std::invalid_argument("t must be >= 2");
        if (edge_size() > VertexSet::capacity)
            throw std::invalid_argument("r*t^2 exceeds the vertex capacity");
    }

    int edge_size() const { return r * t * t; }        // k
    int ell() const { return r * t; }                  // edge size / t
    int centre_size() const { return r * t * (t - 1); }

    /// Membership of an intersection size in the permitted set.
    bool in_profile(int s) const { return s % t == 0 || s >= centre_size(); }
};

struct MembershipReport {
    bool member = false;
    // set when some edge has the wrong size
    std::optional<VertexSet> non_uniform_edge;
    // first violating pair in the colex edge order (scan j ascending, i < j)
    std::optional<std::pair<VertexSet, VertexSet>> violation;
};

/// Membership test for the family given by p.  On failure the report
/// distinguishes a uniformity defect from an intersection violation and
/// returns the first offending pair in colex order.
inline MembershipReport is_jrt_member(const JrtParams& p, const Hypergraph& h) {
    MembershipReport rep;
    const int k = p.edge_size();
    for (const auto& e : h.edges)
        if (e.count() != k) {
            rep.non_uniform_edge = e;
            return rep;
        }
    if (h.edge_count() >= 2) {
        // all pairwise intersections contain the common core; when that is
        // already >= rt(t-1) every pair is permitted
        VertexSet core = h.edges.front();
        for (const auto& e : h.edges) core &= e;
        if (core.count() >= p.centre_size()) {
            rep.member = true;
            return rep;
        }
    }
    bool allowed[VertexSet::capacity + 1];
    for (int s = 0; s <= k; ++s) allowed[s] = p.in_profile(s);
    const int m = h.edge_count();
    for (int j = 1; j < m; ++j) {
        const VertexSet& ej = h.edges[j];
        for (int i = 0; i < j; ++i)
            if (!allowed[h.edges[i].intersection_count(ej)]) {
                rep.violation = {h.edges[i], h.edges[j]};
                return rep;
            }
    }
    rep.member = true;
    return rep;
}

/// All pairwise intersections of distinct edges are multiples of t.
inline bool is_t_divisible(int t, const Hypergraph& s) {
    const int m = s.edge_count();
    for (int j = 1; j < m; ++j)
        for (int i = 0; i < j; ++i)
            if (s.edges[i].intersection_count(s.edges[j]) % t != 0) return false;
    return true;
}

struct DivisiblePairParams {
    int q;
    int k;

    DivisiblePairParams(int q_, int k_) : q(q_), k(k_) {
        if (q < 1) throw std::invalid_argument("q must be >= 1");
        if (k < 1) throw std::invalid_argument("k must be >= 1");
    }
};

/// q divides |f ∩ g| for every f in F and g in G.  The pairs are not
/// required to be distinct, so a set shared by both systems needs a size
/// divisible by q.
inline bool is_divisible_pair(int q, const Hypergraph& f, const Hypergraph& g) {
    for (const auto& a : f.edges)
        for (const auto& b : g.edges)
            if (a.intersection_count(b) % q != 0) return false;
    return true;
}

inline std::optional<std::pair<VertexSet, VertexSet>> divisible_pair_violation(
    int q, const Hypergraph& f, const Hypergraph& g) {
    for (const auto& a : f.edges)
        for (const auto& b : g.edges)
            if (a.intersection_count(b) % q != 0) return std::make_pair(a, b);
    return std::nullopt;
}

}  // namespace jrt
