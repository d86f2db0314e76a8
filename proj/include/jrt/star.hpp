#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "jrt/exact.hpp"
#include "jrt/hypergraph.hpp"
#include "jrt/profile.hpp"

namespace jrt {

/// A star: every edge contains the centre; the body holds the edge
/// remainders.  During core peeling the body may temporarily keep vertices
/// of degree zero, so it is stored explicitly rather than derived.
struct Star {
    VertexSet centre;
    VertexSet body;
    std::vector<VertexSet> edges;  // colex-sorted, each containing the centre

    int size() const { return static_cast<int>(edges.size()); }

    int body_degree(int v) const {
        int d = 0;
        for (const auto& e : edges) d += e.test(v);
        return d;
    }

    void validate() const {
        if (centre.intersects(body)) throw std::invalid_argument("star: centre meets body");
        for (const auto& e : edges) {
            if (!centre.subset_of(e)) throw std::invalid_argument("star: edge misses the centre");
            if (!(e - centre).subset_of(body))
                throw std::invalid_argument("star: edge leaves the body");
        }
    }
};

/// Builds a star from its centre and edge list; the body is the union of
/// the edge remainders.
inline Star make_star(const VertexSet& centre, std::vector<VertexSet> edges) {
    Star s;
    s.centre = centre;
    std::sort(edges.begin(), edges.end(), colex_less);
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    s.edges = std::move(edges);
    for (const auto& e : s.edges) s.body |= e - centre;
    s.validate();
    return s;
}

/// The maximal star of h with the given centre: every edge containing it.
inline Star maximal_star(const Hypergraph& h, const VertexSet& centre) {
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges)
        if (centre.subset_of(e)) edges.push_back(e);
    return make_star(centre, std::move(edges));
}

/// Minimum degree a body vertex must reach in a heavy star with body size
/// body_n: 2 r^2 t^3 body_n^(rt-2).  body_n^0 counts as 1 even for an
/// empty body.
inline mpz_class heavy_threshold(const JrtParams& p, int body_n) {
    const unsigned long exp = static_cast<unsigned long>(p.ell() - 2);
    mpz_class scale = exp == 0 ? mpz_class(1) : ipow(static_cast<unsigned long>(body_n), exp);
    return mpz_class(2) * p.r * p.r * p.t * p.t * p.t * scale;
}

/// Every body vertex has star-degree at least the heavy threshold; an empty
/// star is vacuously heavy.
inline bool is_heavy(const JrtParams& p, const Star& s) {
    const mpz_class need = heavy_threshold(p, s.body.count());
    bool ok = true;
    s.body.for_each([&](int v) {
        if (mpz_class(s.body_degree(v)) < need) ok = false;
    });
    return ok;
}

struct Removal {
    int vertex;
    int degree;  // star-degree at the moment of removal
};

struct StarCore {
    Star core;                    // heavy or empty
    std::vector<Removal> removed; // peel trace, in order
};

/// Peels the star to its core: while it is not heavy, remove the smallest-id
/// body vertex of minimum degree together with every edge through it.
inline StarCore core(const JrtParams& p, const Star& s) {
    StarCore out;
    out.core = s;
    while (!out.core.body.empty()) {
        const mpz_class need = heavy_threshold(p, out.core.body.count());
        int worst_v = -1, worst_d = 0;
        out.core.body.for_each([&](int v) {
            int d = out.core.body_degree(v);
            if (worst_v < 0 || d < worst_d) {
                worst_v = v;
                worst_d = d;
            }
        });
        if (mpz_class(worst_d) >= need) break;  // heavy
        out.removed.push_back({worst_v, worst_d});
        std::vector<VertexSet> kept;
        for (const auto& e : out.core.edges)
            if (!e.test(worst_v)) kept.push_back(e);
        out.core.edges = std::move(kept);
        out.core.body.reset(worst_v);
    }
    return out;
}

/// Smallest N with binom(N-1, rt-1) >= rt*m/n - rt*n^(rt-2), evaluated in
/// exact rational arithmetic.
inline int hat_n(const JrtParams& p, int n, long long m) {
    if (n < 1) throw std::invalid_argument("hat_n: n must be positive");
    const unsigned long rt = static_cast<unsigned long>(p.ell());
    mpq_class rhs(mpz_class(rt) * mpz_class(static_cast<long>(m)), mpz_class(n));
    rhs.canonicalize();
    rhs -= mpz_class(rt) * ipow(static_cast<unsigned long>(n), rt - 2);
    for (int cand = 1;; ++cand) {
        if (mpq_class(binom(cand - 1, rt - 1)) >= rhs) return cand;
    }
}

struct ContainmentReport {
    bool preconditions_ok = true;
    std::string precondition_failure;
    bool holds = true;
    std::optional<VertexSet> violator;  // colex-first edge meeting the body
                                        // without containing the centre
};

/// Every edge of h that meets the body of the heavy star s must contain its
/// centre.  A violator falsifies the containment property and is reported
/// as an internal-consistency witness.
inline ContainmentReport centre_containment_check(const JrtParams& p, const Hypergraph& h,
                                                  const Star& s) {
    ContainmentReport rep;
    for (const auto& e : s.edges)
        if (!h.contains_edge(e)) {
            rep.preconditions_ok = false;
            rep.precondition_failure = "star edge " + e.str() + " not in the hypergraph";
            break;
        }
    if (rep.preconditions_ok && !is_heavy(p, s)) {
        rep.preconditions_ok = false;
        rep.precondition_failure = "star is not heavy";
    }
    if (rep.preconditions_ok && !is_jrt_member(p, h).member) {
        rep.preconditions_ok = false;
        rep.precondition_failure = "hypergraph is not a family member";
    }
    for (const auto& e : h.edges)
        if (e.intersects(s.body) && !s.centre.subset_of(e)) {
            rep.holds = false;
            rep.violator = e;
            break;
        }
    return rep;
}

}  // namespace jrt
