#pragma once

#include <string>
#include <vector>

#include "jrt/star.hpp"
#include "jrt/structure.hpp"

namespace jrt {

struct ExtractionStep {
    int n_before = 0;
    int m_before = 0;
    Star star;      // the maximal star pulled out
    StarCore core;  // its heavy-or-empty core
};

struct ExtractionResult {
    int hat_threshold = 0;  // body-size threshold of the original instance
    std::vector<ExtractionStep> steps;
    Hypergraph residual;
    VertexSet active;  // vertices never deleted
    std::string stop_reason;
};

/// Iterated star removal: while the remaining part is large enough (vertex
/// count at least the original threshold, edge count above the thick-clique
/// count), run the structure pipeline, pull out the maximal star behind the
/// largest star of the certificate, and delete its edges together with the
/// vertices of its core body.  Core heaviness guarantees that no edge
/// outside the star is destroyed; that containment is enforced as a check.
inline ExtractionResult extract_stars(const JrtParams& p, const Hypergraph& h) {
    ExtractionResult out;
    out.active = h.universe();
    out.hat_threshold = hat_n(p, std::max(h.n, 1), h.edge_count());

    Hypergraph current = h;
    while (true) {
        const int n_i = out.active.count();
        const int m_i = current.edge_count();
        if (n_i < out.hat_threshold) {
            out.stop_reason = "vertex-count-below-threshold";
            break;
        }
        if (mpz_class(m_i) <= binom(n_i / p.t, p.ell())) {
            out.stop_reason = "edge-count-not-above-thick-clique";
            break;
        }
        auto structure = build_structure(p, current, out.active);
        if (structure.cert.stars.empty()) {
            out.stop_reason = "no-star-part";
            break;
        }
        const Star* largest = &structure.cert.stars.front();
        for (const auto& s : structure.cert.stars)
            if (s.size() > largest->size()) largest = &s;

        ExtractionStep step;
        step.n_before = n_i;
        step.m_before = m_i;
        step.star = maximal_star(current, largest->centre);
        step.core = core(p, step.star);

        // only edges of the extracted star may touch the deleted vertices
        for (const auto& e : current.edges)
            if (e.intersects(step.core.core.body))
                detail::hard_check(largest->centre.subset_of(e), "extraction-containment",
                                   e.str());

        std::vector<VertexSet> kept;
        for (const auto& e : current.edges)
            if (!largest->centre.subset_of(e)) kept.push_back(e);
        current = Hypergraph(current.n, std::move(kept), current.uniform);
        out.active -= step.core.core.body;
        out.steps.push_back(std::move(step));
    }
    out.residual = current;
    return out;
}

}  // namespace jrt
