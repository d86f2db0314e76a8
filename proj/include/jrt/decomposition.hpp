#pragma once

#include <algorithm>
#include <vector>

#include "jrt/errors.hpp"
#include "jrt/exact.hpp"
#include "jrt/hypergraph.hpp"
#include "jrt/parallel.hpp"
#include "jrt/profile.hpp"

namespace jrt {

inline constexpr int saturation_support_cap = 24;
inline constexpr std::size_t saturation_closure_cap = 200000;

struct Decomposition {
    VertexSet edge;
    std::vector<VertexSet> parts;  // disjoint basis members whose union is `edge`
};

struct DecompositionResult {
    DivisiblePairParams params{1, 1};
    VertexSet support;             // maximality is relative to this universe
    Hypergraph closure;            // the saturated system F*
    Hypergraph basis;              // antichain of minimal nonempty members
    std::vector<Decomposition> decompositions;  // one per input member of F
    mpz_class degree_bound;        // k^(2k)
    int basis_max_degree = 0;
};

/// Extends F to a family that is maximal q-divisible against itself and G,
/// over all subsets of the support of F and G of size at most k.  Scans
/// candidates in colex order and iterates to a fixpoint, so the result is
/// deterministic.  Throws when the support exceeds the enumeration cap or
/// the input pair is not q-divisible.
inline Hypergraph saturate(const DivisiblePairParams& params, const Hypergraph& f,
                           const Hypergraph& g) {
    for (const auto& e : f.edges)
        if (e.count() > params.k)
            throw std::invalid_argument("saturate: member of F larger than k");
    for (const auto& e : g.edges)
        if (e.count() > params.k)
            throw std::invalid_argument("saturate: member of G larger than k");
    if (auto bad = divisible_pair_violation(params.q, f, f))
        throw check_failure("divisible-pair-precondition",
                            bad->first.str() + " vs " + bad->second.str());
    if (auto bad = divisible_pair_violation(params.q, f, g))
        throw check_failure("divisible-pair-precondition",
                            bad->first.str() + " vs " + bad->second.str());

    const VertexSet support = f.support() | g.support();
    if (support.count() > saturation_support_cap)
        throw capacity_error("saturate: support has " + std::to_string(support.count()) +
                             " vertices, cap is " + std::to_string(saturation_support_cap));

    std::vector<VertexSet> candidates;
    for_each_small_subset(support, params.k, [&](const VertexSet& c) { candidates.push_back(c); });
    std::sort(candidates.begin(), candidates.end(), colex_less);

    std::vector<VertexSet> closure = f.edges;  // canonical, colex-sorted
    auto member = [&](const VertexSet& c) {
        return std::binary_search(closure.begin(), closure.end(), c, colex_less);
    };
    const int q = params.q;
    bool changed = true;
    while (changed) {
        changed = false;
        // filter against the current closure in parallel, then re-verify in
        // colex order against this round's additions
        std::vector<char> pass(candidates.size(), 0);
        exec::parallel_for(candidates.size(), [&](std::size_t i) {
            const VertexSet& c = candidates[i];
            if (c.count() % q != 0 || member(c)) return;
            for (const auto& e : g.edges)
                if (c.intersection_count(e) % q != 0) return;
            for (const auto& e : closure)
                if (c.intersection_count(e) % q != 0) return;
            pass[i] = 1;
        });
        std::vector<VertexSet> added;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!pass[i]) continue;
            const VertexSet& c = candidates[i];
            bool ok = true;
            for (const auto& e : added)
                if (c.intersection_count(e) % q != 0) {
                    ok = false;
                    break;
                }
            if (ok) added.push_back(c);
        }
        if (!added.empty()) {
            changed = true;
            closure.insert(closure.end(), added.begin(), added.end());
            std::sort(closure.begin(), closure.end(), colex_less);
            if (closure.size() > saturation_closure_cap)
                throw capacity_error("saturate: closure exceeds " +
                                     std::to_string(saturation_closure_cap) + " sets");
        }
    }
    Hypergraph out;
    out.n = std::max(f.n, g.n);
    out.edges = std::move(closure);
    return out;
}

/// Nonempty members of f_star having no nonempty proper subset in f_star.
inline Hypergraph minimal_members(const Hypergraph& f_star) {
    std::vector<VertexSet> by_size = f_star.edges;
    std::sort(by_size.begin(), by_size.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.count() != b.count() ? a.count() < b.count() : colex_less(a, b);
    });
    std::vector<VertexSet> basis;
    for (const auto& x : by_size) {
        if (x.empty()) continue;
        bool minimal = true;
        for (const auto& h : basis)
            if (h.subset_of(x)) {
                minimal = false;
                break;
            }
        if (minimal) basis.push_back(x);
    }
    Hypergraph out;
    out.n = f_star.n;
    out.edges = std::move(basis);
    out.canonicalize();
    return out;
}

/// Saturates, extracts the basis, expresses every member of F as a disjoint
/// union of basis members (peeling the colex-least contained basis member),
/// and verifies the four decomposition-lemma clauses on the result.
inline DecompositionResult decompose(const DivisiblePairParams& params, const Hypergraph& f,
                                     const Hypergraph& g) {
    DecompositionResult out{params, {}, {}, {}, {}, 0, 0};
    out.support = f.support() | g.support();
    out.closure = saturate(params, f, g);
    out.basis = minimal_members(out.closure);
    out.degree_bound = ipow(params.k, 2UL * params.k);

    for (const auto& original : f.edges) {
        Decomposition d;
        d.edge = original;
        VertexSet rest = original;
        while (!rest.empty()) {
            const VertexSet* pick = nullptr;
            for (const auto& h : out.basis.edges)
                if (h.subset_of(rest)) {
                    pick = &h;  // basis is colex-sorted, first hit is colex-least
                    break;
                }
            if (!pick)
                throw check_failure("decompose-basis-cover",
                                    "no basis member inside " + rest.str());
            if (!out.closure.contains_edge(rest))
                throw check_failure("decompose-closure-membership",
                                    rest.str() + " missing from the closure");
            d.parts.push_back(*pick);
            rest -= *pick;
        }
        out.decompositions.push_back(std::move(d));
    }

    // clause (i): bounded maximum degree, compared in big integers
    out.basis_max_degree = max_degree(out.basis);
    if (mpz_class(out.basis_max_degree) > out.degree_bound)
        throw check_failure("decompose-degree-bound",
                            "basis max degree " + std::to_string(out.basis_max_degree));
    // clause (ii): antichain
    for (const auto& a : out.basis.edges)
        for (const auto& b : out.basis.edges)
            if (!(a == b) && a.subset_of(b))
                throw check_failure("decompose-antichain", a.str() + " inside " + b.str());
    // clause (iii): disjoint unions reassemble the inputs
    for (const auto& d : out.decompositions) {
        VertexSet u;
        int total = 0;
        for (const auto& part : d.parts) {
            u |= part;
            total += part.count();
        }
        if (!(u == d.edge) || total != d.edge.count())
            throw check_failure("decompose-disjoint-union", d.edge.str());
    }
    // clause (iv): the pair (basis, basis ∪ G) stays q-divisible
    if (!is_divisible_pair(params.q, out.basis, out.basis) ||
        !is_divisible_pair(params.q, out.basis, g))
        throw check_failure("decompose-divisibility", "basis pair not q-divisible");
    return out;
}

}  // namespace jrt
