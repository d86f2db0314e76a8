#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "jrt/decomposition.hpp"
#include "jrt/errors.hpp"
#include "jrt/exact.hpp"
#include "jrt/gf_rank.hpp"
#include "jrt/hypergraph.hpp"
#include "jrt/star.hpp"
#include "jrt/sunflower.hpp"

namespace jrt {

/// Witness that an lt-graph splits into a thick part, semi-disjoint stars
/// and a bounded residual:
///   (i)   v_t is a union of inseparable t-sets (the teams), h_t = H[v_t];
///   (ii)  h_s = {h : |h ∩ v_s| = ell} and consists of semi-disjoint stars
///         with centres outside v_s and bodies inside it;
///   (iii) every edge meeting a star body contains that star's centre;
///   (iv)  |h_r| <= |v_t||v_s| n^(ell-3) + |v_r| a n^(ell-2)  over the
///         certified vertex set, evaluated in exact rationals.
struct StructureCertificate {
    int t = 0;
    int ell = 0;
    mpz_class bound_constant;  // the `a` of clause (iv)

    VertexSet vertices;  // certified vertex universe (may be a sub-universe)
    VertexSet v_t, v_s, v_r;
    Hypergraph h_t, h_s, h_r;
    std::vector<VertexSet> teams;
    std::vector<Star> stars;
};

enum class ResidualClass {
    star_team,    // meets a star body and contains a team clear of that star
    uncovered,    // not a union of red and green subsets
    green_union,  // union of its green subsets
    red_union,    // union of its full-size red subsets
    red_partial,  // contains a full-size red subset but is not such a union
};

inline const char* residual_class_name(ResidualClass c) {
    switch (c) {
        case ResidualClass::star_team: return "star-team";
        case ResidualClass::uncovered: return "uncovered";
        case ResidualClass::green_union: return "green-union";
        case ResidualClass::red_union: return "red-union";
        case ResidualClass::red_partial: return "red-partial";
    }
    return "?";
}

struct PipelineTrace {
    RedColouring red;
    DecompositionResult greens;
    Hypergraph purple;

    struct Assignment {
        VertexSet edge;
        VertexSet centre;
        int alternatives;  // number of admissible centres; colex-least taken
    };
    std::vector<Assignment> star_assignments;

    struct Tagged {
        VertexSet edge;
        ResidualClass cls;
    };
    std::vector<Tagged> residual;

    struct SoftCheck {
        std::string name;
        bool holds;
        std::string detail;
    };
    std::vector<SoftCheck> soft_checks;
};

struct StructureResult {
    StructureCertificate cert;
    PipelineTrace trace;
};

/// Kernels of sunflowers of at least rt^2 members inside the full-size red
/// system.  Members are centre-plus-one-vertex sets, so a kernel candidate
/// is a member minus a vertex and its petal count is its superset count.
inline Hypergraph purple_sets(const JrtParams& p, const Hypergraph& top) {
    const int want = p.centre_size();
    for (const auto& e : top.edges)
        if (e.count() != want + 1)
            throw std::invalid_argument("purple_sets: input is not uniform of size rt(t-1)+1");
    std::map<VertexSet, int> counts;
    for (const auto& e : top.edges)
        e.for_each([&](int v) {
            VertexSet y = e;
            y.reset(v);
            ++counts[y];
        });
    Hypergraph out;
    out.n = top.n;
    for (const auto& [y, c] : counts)
        if (c >= p.edge_size()) out.edges.push_back(y);
    out.canonicalize();
    return out;
}

struct ClauseViolation {
    std::string clause;
    std::string detail;
};

struct VerifyReport {
    bool ok = true;
    std::vector<ClauseViolation> violations;

    void fail(std::string clause, std::string detail) {
        ok = false;
        violations.push_back({std::move(clause), std::move(detail)});
    }
};

/// Checks a certificate against the hypergraph independently of how it was
/// produced; usable on hand-crafted certificates.  Reports every violated
/// clause rather than stopping at the first.
inline VerifyReport verify_certificate(const JrtParams& p, const Hypergraph& h,
                                       const StructureCertificate& c) {
    VerifyReport rep;
    if (c.t != p.t || c.ell != p.ell())
        rep.fail("params", "certificate parameters disagree with (r,t)");

    // well-formed partitions
    if ((c.v_t | c.v_s | c.v_r) != c.vertices || c.v_t.intersects(c.v_s) ||
        c.v_t.intersects(c.v_r) || c.v_s.intersects(c.v_r))
        rep.fail("vertex-partition", "v_t, v_s, v_r do not partition the vertex set");
    {
        std::vector<VertexSet> all = c.h_t.edges;
        all.insert(all.end(), c.h_s.edges.begin(), c.h_s.edges.end());
        all.insert(all.end(), c.h_r.edges.begin(), c.h_r.edges.end());
        std::sort(all.begin(), all.end(), colex_less);
        if (std::adjacent_find(all.begin(), all.end()) != all.end() || all != h.edges)
            rep.fail("edge-partition", "h_t, h_s, h_r do not partition the edge set");
    }

    // clause (i)
    VertexSet team_union;
    for (const auto& w : c.teams) {
        if (w.count() != c.t) rep.fail("teams", "team " + w.str() + " has the wrong size");
        if (team_union.intersects(w)) rep.fail("teams", "team " + w.str() + " overlaps another");
        team_union |= w;
        for (const auto& e : h.edges) {
            VertexSet x = w & e;
            if (!x.empty() && !(x == w)) {
                rep.fail("inseparable", "team " + w.str() + " split by edge " + e.str());
                break;
            }
        }
    }
    if (!(team_union == c.v_t)) rep.fail("thick-part", "v_t is not the union of the teams");
    if (!(induced(h, c.v_t).edges == c.h_t.edges))
        rep.fail("thick-part", "h_t differs from the subgraph induced on v_t");

    // clause (ii)
    {
        std::vector<VertexSet> expect;
        for (const auto& e : h.edges)
            if (e.intersection_count(c.v_s) == c.ell) expect.push_back(e);
        if (!(expect == c.h_s.edges))
            rep.fail("star-part", "h_s differs from the edges meeting v_s in ell vertices");
    }
    {
        std::vector<VertexSet> covered;
        VertexSet bodies;
        std::vector<VertexSet> centres;
        for (const auto& s : c.stars) {
            if (s.centre.count() != c.ell * (c.t - 1))
                rep.fail("star-centres", "centre " + s.centre.str() + " has the wrong size");
            if (s.centre.intersects(c.v_s))
                rep.fail("star-centres", "centre " + s.centre.str() + " meets v_s");
            if (!s.body.subset_of(c.v_s))
                rep.fail("star-bodies", "body of " + s.centre.str() + " leaves v_s");
            if (bodies.intersects(s.body))
                rep.fail("semi-disjoint", "star bodies overlap at centre " + s.centre.str());
            bodies |= s.body;
            centres.push_back(s.centre);
            VertexSet remainder_union;
            for (const auto& e : s.edges) {
                if (!s.centre.subset_of(e) || !(e - s.centre).subset_of(s.body))
                    rep.fail("star-edges", "edge " + e.str() + " does not fit its star");
                covered.push_back(e);
                remainder_union |= e - s.centre;
            }
            if (!(remainder_union == s.body))
                rep.fail("star-bodies", "body of " + s.centre.str() +
                                            " is not the union of edge remainders");
        }
        std::sort(centres.begin(), centres.end(), colex_less);
        if (std::adjacent_find(centres.begin(), centres.end()) != centres.end())
            rep.fail("semi-disjoint", "two stars share a centre");
        std::sort(covered.begin(), covered.end(), colex_less);
        if (std::adjacent_find(covered.begin(), covered.end()) != covered.end() ||
            !(covered == c.h_s.edges))
            rep.fail("star-cover", "stars do not partition h_s");
    }

    // clause (iii)
    for (const auto& s : c.stars)
        for (const auto& e : h.edges)
            if (e.intersects(s.body) && !s.centre.subset_of(e)) {
                rep.fail("centre-containment",
                         "edge " + e.str() + " meets the body of " + s.centre.str());
                break;
            }

    // clause (iv): |h_r| <= |v_t||v_s| n^(ell-3) + |v_r| a n^(ell-2)
    {
        const long n = c.vertices.count();
        mpq_class rhs(0);
        const long c1 = static_cast<long>(c.v_t.count()) * c.v_s.count();
        if (c1 > 0) {
            if (c.ell >= 3)
                rhs += mpq_class(mpz_class(c1) * ipow(n, c.ell - 3));
            else
                rhs += mpq_class(mpz_class(c1), ipow(n, 3 - c.ell));
        }
        if (c.v_r.count() > 0)
            rhs += mpq_class(mpz_class(c.v_r.count()) * c.bound_constant * ipow(n, c.ell - 2));
        mpq_class lhs(c.h_r.edge_count());
        if (lhs > rhs) rep.fail("residual-bound", "h_r has " +
                                    std::to_string(c.h_r.edge_count()) + " edges");
    }
    return rep;
}

namespace detail {

inline void hard_check(bool ok, const char* id, const std::string& witness) {
    if (!ok) throw check_failure(id, witness);
}

}  // namespace detail

/// Runs the full decomposition pipeline on a family member: red colouring,
/// green sets via the decomposition lemma, teams, purple sets, the star
/// part, and the residual classification.  Structural identities that are
/// theorems for genuine members are enforced as hard checks; a failure
/// means a non-member input or an implementation fault.  The active set
/// restricts the certified universe (used by the star extraction loop).
inline StructureResult build_structure(const JrtParams& p, const Hypergraph& h,
                                       std::optional<VertexSet> active_opt = std::nullopt) {
    const VertexSet active = active_opt.value_or(h.universe());
    for (const auto& e : h.edges)
        detail::hard_check(e.subset_of(active), "active-set", e.str());
    {
        auto mem = is_jrt_member(p, h);
        if (!mem.member) {
            std::string w = mem.non_uniform_edge ? "non-uniform edge " + mem.non_uniform_edge->str()
                                                 : "violating pair " + mem.violation->first.str() +
                                                       " vs " + mem.violation->second.str();
            throw check_failure("membership", w);
        }
    }
    const int n_active = active.count();

    StructureResult out;
    StructureCertificate& cert = out.cert;
    PipelineTrace& trace = out.trace;
    cert.t = p.t;
    cert.ell = p.ell();
    {
        // (rt^2) ^ (r^3 t^6)
        unsigned long exp = 1;
        for (int i = 0; i < 3; ++i) exp *= static_cast<unsigned long>(p.r);
        for (int i = 0; i < 6; ++i) exp *= static_cast<unsigned long>(p.t);
        cert.bound_constant = ipow(p.edge_size(), exp);
    }
    cert.vertices = active;

    // stage 1: red colouring, with the intersection-profile identity for
    // every pair drawn from the edges and the red sets
    trace.red = red_colouring(p, h);
    {
        std::vector<VertexSet> pool = h.edges;
        pool.insert(pool.end(), trace.red.sets.edges.begin(), trace.red.sets.edges.end());
        for (std::size_t j = 0; j < pool.size(); ++j)
            for (std::size_t i = 0; i <= j; ++i)
                detail::hard_check(p.in_profile(pool[i].intersection_count(pool[j])),
                                   "red-profile",
                                   pool[i].str() + " vs " + pool[j].str());
    }
    {
        Hypergraph top = trace.red.top;
        top.n = h.n;
        auto rank = rank_bound_check(p.t, top);
        detail::hard_check(rank.sizes_ok && rank.divisible, "red-top-hypotheses", "");
        detail::hard_check(rank.independent, "red-top-independent",
                           "rank " + std::to_string(rank.rank));
        detail::hard_check(top.edge_count() <= n_active, "red-top-count",
                           std::to_string(top.edge_count()) + " > " + std::to_string(n_active));
    }

    // stage 2: green sets from the decomposition lemma; teams are the green
    // t-sets
    {
        Hypergraph g;
        g.n = h.n;
        g.edges = trace.red.top.edges;
        g.edges.insert(g.edges.end(), h.edges.begin(), h.edges.end());
        g.canonicalize();
        trace.greens = decompose(DivisiblePairParams(p.t, p.edge_size()), trace.red.rest, g);
    }
    for (const auto& b : trace.greens.basis.edges)
        if (b.count() == p.t) cert.teams.push_back(b);
    for (const auto& w : cert.teams) {
        for (const auto& other : trace.greens.basis.edges)
            detail::hard_check(w == other || !w.intersects(other), "team-disjoint",
                               w.str() + " vs " + other.str());
        for (const auto& e : h.edges) {
            VertexSet x = w & e;
            detail::hard_check(x.empty() || x == w, "team-inseparable",
                               w.str() + " split by " + e.str());
        }
    }

    // stage 3: thick part
    for (const auto& w : cert.teams) cert.v_t |= w;
    cert.h_t = induced(h, cert.v_t);

    // stage 4: purple sets
    trace.purple = purple_sets(p, trace.red.top);
    {
        std::vector<VertexSet> pool = trace.red.top.edges;
        pool.insert(pool.end(), h.edges.begin(), h.edges.end());
        for (const auto& y : trace.purple.edges) {
            for (const auto& y2 : trace.purple.edges)
                detail::hard_check(p.in_profile(y.intersection_count(y2)), "purple-profile",
                                   y.str() + " vs " + y2.str());
            for (const auto& f : pool)
                detail::hard_check(p.in_profile(y.intersection_count(f)), "purple-profile",
                                   y.str() + " vs " + f.str());
        }
    }

    // stage 5: star part.  An edge joins when some purple set inside it
    // extends to a full-size red set through every remaining vertex; ties
    // between admissible centres go to the colex-least one.
    std::vector<VertexSet> star_edges;
    for (const auto& e : h.edges) {
        std::vector<VertexSet> admissible;
        for (const auto& y : trace.purple.edges) {
            if (!y.subset_of(e)) continue;
            bool ok = true;
            (e - y).for_each([&](int v) {
                VertexSet ext = y;
                ext.set(v);
                if (!trace.red.top.contains_edge(ext)) ok = false;
            });
            if (ok) admissible.push_back(y);
        }
        if (!admissible.empty()) {
            trace.star_assignments.push_back(
                {e, admissible.front(), static_cast<int>(admissible.size())});
            star_edges.push_back(e);
            cert.v_s |= e - admissible.front();
        }
    }
    cert.h_s = Hypergraph(h.n, star_edges, h.uniform);

    // stage 6: remainder
    cert.v_r = active - (cert.v_t | cert.v_s);
    {
        std::vector<VertexSet> rest;
        for (const auto& e : h.edges)
            if (!cert.h_t.contains_edge(e) && !cert.h_s.contains_edge(e)) rest.push_back(e);
        cert.h_r = Hypergraph(h.n, std::move(rest), h.uniform);
    }

    // stage 7: the identities behind clauses (ii) and (iii)
    detail::hard_check(!cert.v_s.intersects(cert.v_t), "star-thick-disjoint",
                       (cert.v_s & cert.v_t).str());
    for (const auto& asg : trace.star_assignments)
        detail::hard_check(!asg.centre.intersects(cert.v_s), "centre-outside-bodies",
                           asg.centre.str());
    {
        std::map<VertexSet, std::vector<VertexSet>> groups;
        for (const auto& asg : trace.star_assignments)
            groups[asg.centre].push_back(asg.edge);
        VertexSet seen_bodies;
        for (auto& [centre, edges] : groups) {
            Star s = make_star(centre, edges);
            detail::hard_check(!seen_bodies.intersects(s.body), "bodies-disjoint", centre.str());
            seen_bodies |= s.body;
            cert.stars.push_back(std::move(s));
        }
        for (const auto& s : cert.stars)
            for (const auto& e : h.edges)
                detail::hard_check(!e.intersects(s.body) || s.centre.subset_of(e),
                                   "centre-containment", e.str() + " vs " + s.centre.str());
    }
    for (const auto& e : h.edges)
        detail::hard_check((e.intersection_count(cert.v_s) == p.ell()) ==
                               cert.h_s.contains_edge(e),
                           "star-part-identity", e.str());

    // stage 8: residual classification
    {
        auto star_centre_of = [&](int v) -> const VertexSet* {
            for (const auto& s : cert.stars)
                if (s.body.test(v)) return &s.centre;
            return nullptr;
        };
        for (const auto& e : cert.h_r.edges) {
            std::optional<ResidualClass> cls;
            // a marked body vertex plus a team inside the edge, clear of the
            // vertex's own red set
            (e & cert.v_s).for_each([&](int v) {
                if (cls) return;
                const VertexSet* centre = star_centre_of(v);
                detail::hard_check(centre != nullptr, "body-star-lookup", e.str());
                VertexSet yv = *centre;
                yv.set(v);
                for (const auto& w : cert.teams)
                    if (w.subset_of(e) && !yv.intersects(w)) {
                        cls = ResidualClass::star_team;
                        return;
                    }
            });
            if (!cls) {
                VertexSet covered;
                for (const auto& f : trace.red.sets.edges)
                    if (f.subset_of(e)) covered |= f;
                VertexSet green_covered;
                for (const auto& f : trace.greens.basis.edges)
                    if (f.subset_of(e)) green_covered |= f;
                covered |= green_covered;
                if (!(covered == e)) {
                    cls = ResidualClass::uncovered;
                } else if (green_covered == e) {
                    cls = ResidualClass::green_union;
                } else {
                    VertexSet top_covered;
                    for (const auto& f : trace.red.top.edges)
                        if (f.subset_of(e)) top_covered |= f;
                    detail::hard_check(!top_covered.empty(), "residual-cover", e.str());
                    cls = top_covered == e ? ResidualClass::red_union : ResidualClass::red_partial;
                }
            }
            trace.residual.push_back({e, *cls});
            if (!e.intersects(cert.v_r))
                detail::hard_check(*cls == ResidualClass::star_team, "residual-outside-remainder",
                                   e.str());
        }
    }

    // soft check: with no star part the member should be thick
    if (cert.v_s.empty()) {
        const bool empty_rest = cert.h_r.edge_count() == 0;
        const bool count_ok =
            mpz_class(h.edge_count()) <= binom(n_active / p.t, p.ell());
        trace.soft_checks.push_back({"thick-when-starless", empty_rest && count_ok,
                                     empty_rest ? "edge count vs thick clique" : "h_r not empty"});
    }

    auto rep = verify_certificate(p, h, cert);
    if (!rep.ok)
        throw check_failure(rep.violations.front().clause, rep.violations.front().detail);
    return out;
}

}  // namespace jrt
