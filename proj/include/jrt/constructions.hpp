#pragma once

#include <stdexcept>
#include <vector>

#include "jrt/hypergraph.hpp"
#include "jrt/profile.hpp"
#include "jrt/rng.hpp"

namespace jrt {

struct TeamPartition {
    std::vector<VertexSet> teams;  // disjoint t-sets, consecutive blocks from 0
    VertexSet leftovers;           // the < t remaining vertices
};

struct ThickClique {
    Hypergraph h;
    TeamPartition teams;
};

/// The k-graph on n vertices whose edges are all unions of k/t of the
/// consecutive teams {0..t-1}, {t..2t-1}, ...  Edge count binom(floor(n/t), k/t).
inline ThickClique thick_clique(int n, int k, int t) {
    if (t < 1 || k < 1) throw std::invalid_argument("thick_clique: k and t must be positive");
    if (k % t != 0) throw std::invalid_argument("thick_clique: t must divide k");
    if (k > n) throw std::invalid_argument("thick_clique: k exceeds n");
    if (n > VertexSet::capacity) throw std::invalid_argument("thick_clique: n exceeds capacity");

    ThickClique out;
    const int team_count = n / t;
    for (int i = 0; i < team_count; ++i)
        out.teams.teams.push_back(VertexSet::range(i * t, t));
    out.teams.leftovers = VertexSet::range(team_count * t, n - team_count * t);

    std::vector<int> team_ids(team_count);
    for (int i = 0; i < team_count; ++i) team_ids[i] = i;
    std::vector<VertexSet> edges;
    for_each_subset_of_size(team_ids, k / t, [&](const VertexSet& chosen) {
        VertexSet e;
        chosen.for_each([&](int i) { e |= out.teams.teams[i]; });
        edges.push_back(e);
    });
    out.h = Hypergraph(n, std::move(edges), k);
    return out;
}

struct StarSpec {
    VertexSet centre;
    VertexSet body;
    int k = 0;
};

struct FullStar {
    Hypergraph h;
    StarSpec spec;
};

/// All k-sets containing the centre {0..s-1}.  Edge count binom(n-s, k-s).
inline FullStar full_star(int n, int k, int s) {
    if (s < 0 || s > k || k > n) throw std::invalid_argument("full_star: need 0 <= s <= k <= n");
    if (n > VertexSet::capacity) throw std::invalid_argument("full_star: n exceeds capacity");

    FullStar out;
    out.spec.centre = VertexSet::prefix(s);
    out.spec.k = k;
    std::vector<int> rest;
    for (int v = s; v < n; ++v) rest.push_back(v);
    std::vector<VertexSet> edges;
    for_each_subset_of_size(rest, k - s, [&](const VertexSet& body_part) {
        edges.push_back(out.spec.centre | body_part);
        out.spec.body |= body_part;
    });
    out.h = Hypergraph(n, std::move(edges), k);
    return out;
}

struct GadgetLayout {
    VertexSet t_block;  // the shared team
    VertexSet c1, c2;   // the two star centres
    VertexSet u1, u2;   // the two star grounds
};

struct TwoStarGadget {
    Hypergraph h;
    GadgetLayout layout;
};

/// Two overlapping full-star-like parts glued through a thick clique on the
/// shared low vertices.  Vertex layout (low to high): T, C1, C2, U1, U2 with
/// |T| = t, |Ci| = rt(t-1), |Ui| = u.  Edge classes:
///   C_i plus an rt-subset of U_i,
///   T + C_i plus an (r-1)t-subset of U_i,
///   the thick clique on T+C1+C2 whose teams are T and the t-blocks of C1, C2.
/// Classes are deduplicated into one canonical edge list.
inline TwoStarGadget two_star_gadget(int r, int t, int u) {
    JrtParams p(r, t);
    if (u < p.ell()) throw std::invalid_argument("two_star_gadget: u must be >= r*t");
    const int c = p.centre_size();
    const int n = 2 * u + 2 * c + t;
    if (n > VertexSet::capacity) throw std::invalid_argument("two_star_gadget: n exceeds capacity");

    TwoStarGadget out;
    out.layout.t_block = VertexSet::range(0, t);
    out.layout.c1 = VertexSet::range(t, c);
    out.layout.c2 = VertexSet::range(t + c, c);
    out.layout.u1 = VertexSet::range(t + 2 * c, u);
    out.layout.u2 = VertexSet::range(t + 2 * c + u, u);

    std::vector<VertexSet> edges;
    auto add_star_class = [&](const VertexSet& base, const VertexSet& ground, int take) {
        for_each_subset_of_size(ground.vertices(), take, [&](const VertexSet& part) {
            edges.push_back(base | part);
        });
    };
    add_star_class(out.layout.c1, out.layout.u1, p.ell());
    add_star_class(out.layout.c2, out.layout.u2, p.ell());
    add_star_class(out.layout.t_block | out.layout.c1, out.layout.u1, (r - 1) * t);
    add_star_class(out.layout.t_block | out.layout.c2, out.layout.u2, (r - 1) * t);

    // thick clique over T, the t-blocks of C1 and the t-blocks of C2
    std::vector<VertexSet> teams;
    teams.push_back(out.layout.t_block);
    for (int i = 0; i < r * (t - 1); ++i) teams.push_back(VertexSet::range(t + i * t, t));
    for (int i = 0; i < r * (t - 1); ++i) teams.push_back(VertexSet::range(t + c + i * t, t));
    std::vector<int> ids(teams.size());
    for (std::size_t i = 0; i < teams.size(); ++i) ids[i] = static_cast<int>(i);
    for_each_subset_of_size(ids, p.ell(), [&](const VertexSet& chosen) {
        VertexSet e;
        chosen.for_each([&](int i) { e |= teams[i]; });
        edges.push_back(e);
    });

    out.h = Hypergraph(n, std::move(edges), p.edge_size());
    return out;
}

struct RandomJrt {
    Hypergraph h;
    bool reached_target = true;
    long long rejections = 0;
};

/// Greedy randomized member: draw uniform k-sets and keep each one that is
/// profile-compatible with everything kept so far.  Stops at target_m edges
/// or after 1000*target_m rejected draws.  Deterministic given the seed.
inline RandomJrt random_jrt(const JrtParams& p, int n, int target_m, std::uint64_t seed) {
    if (n < p.edge_size()) throw std::invalid_argument("random_jrt: n < k");
    if (n > VertexSet::capacity) throw std::invalid_argument("random_jrt: n exceeds capacity");

    RandomJrt out;
    Rng rng(seed);
    const long long budget = 1000LL * std::max(target_m, 1);
    std::vector<VertexSet> kept;
    while (static_cast<int>(kept.size()) < target_m && out.rejections < budget) {
        VertexSet cand = rng.subset(n, p.edge_size());
        bool ok = true;
        for (const auto& e : kept) {
            if (e == cand || !p.in_profile(e.intersection_count(cand))) {
                ok = false;
                break;
            }
        }
        if (ok)
            kept.push_back(cand);
        else
            ++out.rejections;
    }
    out.reached_target = static_cast<int>(kept.size()) >= target_m;
    out.h = Hypergraph(n, std::move(kept), p.edge_size());
    return out;
}

}  // namespace jrt
