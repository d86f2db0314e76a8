#pragma once

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "jrt/constructions.hpp"
#include "jrt/errors.hpp"
#include "jrt/exact.hpp"
#include "jrt/hypergraph.hpp"
#include "jrt/profile.hpp"
#include "jrt/sunflower.hpp"

namespace jrt {

/// Candidate edges are all k-subsets of the universe in colex order; two are
/// compatible when their intersection size is permitted.  Family members on
/// the universe correspond to cliques.
struct CompatibilityGraph {
    int n = 0;
    std::vector<VertexSet> candidates;
    std::vector<detail::IndexBits> compatible;

    CompatibilityGraph(const JrtParams& p, int n_) : n(n_) {
        const int k = p.edge_size();
        if (n < k) throw std::invalid_argument("compatibility graph: n < k");
        if (binom(n, k) > 2'000'000)
            throw capacity_error("compatibility graph on " + std::to_string(n) +
                                 " vertices is too large");
        std::vector<int> verts(n);
        std::iota(verts.begin(), verts.end(), 0);
        for_each_subset_of_size(verts, k, [&](const VertexSet& s) { candidates.push_back(s); });
        const std::size_t c = candidates.size();
        compatible.assign(c, detail::IndexBits(c));
        for (std::size_t j = 0; j < c; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (p.in_profile(candidates[i].intersection_count(candidates[j])))
                    compatible[i].set(j);
    }
};

struct SearchBudget {
    long long max_nodes = 50'000'000;  // 0 means unlimited
    long long max_seconds = 0;         // 0 means unlimited; breaks determinism when hit
};

enum class SearchStatus { proved_optimal, bounded, infeasible };

inline const char* search_status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::proved_optimal: return "proved-optimal";
        case SearchStatus::bounded: return "bounded";
        case SearchStatus::infeasible: return "infeasible";
    }
    return "?";
}

struct SearchReport {
    SearchStatus status = SearchStatus::bounded;
    std::optional<int> value;            // resolved minimum of the maximum degree
    std::optional<Hypergraph> witness;   // attains `value`, or the best incumbent
    int lower_bound = 0;                 // ceil(k m / n)
    std::optional<int> upper_bound;      // best construction / incumbent
    long long nodes = 0;
    bool node_budget_hit = false;
    bool time_budget_hit = false;
};

namespace detail {

/// Balanced thick subgraph with m edges: repeatedly add the unused union of
/// rt teams that keeps the running maximum team degree smallest.
inline std::optional<Hypergraph> balanced_thick_witness(const JrtParams& p, int n, int m) {
    const int teams = n / p.t;
    if (mpz_class(m) > binom(teams, p.ell())) return std::nullopt;
    auto tc = thick_clique(n, p.edge_size(), p.t);
    std::vector<int> ids(teams);
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<VertexSet> team_subsets;
    for_each_subset_of_size(ids, p.ell(), [&](const VertexSet& s) { team_subsets.push_back(s); });

    std::vector<int> team_deg(teams, 0);
    std::vector<char> used(team_subsets.size(), 0);
    std::vector<VertexSet> edges;
    for (int round = 0; round < m; ++round) {
        int best = -1, best_max = -1;
        for (std::size_t i = 0; i < team_subsets.size(); ++i) {
            if (used[i]) continue;
            int mx = 0;
            team_subsets[i].for_each([&](int tm) { mx = std::max(mx, team_deg[tm] + 1); });
            if (best < 0 || mx < best_max) {
                best = static_cast<int>(i);
                best_max = mx;
            }
        }
        used[best] = 1;
        VertexSet e;
        team_subsets[best].for_each([&](int tm) {
            ++team_deg[tm];
            e |= tc.teams.teams[tm];
        });
        edges.push_back(e);
    }
    return Hypergraph(n, std::move(edges), p.edge_size());
}

inline std::optional<Hypergraph> star_prefix_witness(const JrtParams& p, int n, int m) {
    const int s = p.centre_size();
    if (mpz_class(m) > binom(n - s, p.edge_size() - s)) return std::nullopt;
    auto fs = full_star(n, p.edge_size(), s);
    fs.h.edges.resize(m);
    return Hypergraph(n, fs.h.edges, p.edge_size());
}

struct CliqueSearch {
    const CompatibilityGraph& graph;
    const int n;
    const int m;
    SearchBudget budget;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    int best_value;  // strict improvement target
    std::optional<Hypergraph> best_witness;
    int floor_value;  // global lower bound; reaching it ends the search
    long long nodes = 0;
    bool node_budget_hit = false;
    bool time_budget_hit = false;
    bool found_any = false;

    std::vector<int> degs;
    std::vector<int> chosen;

    CliqueSearch(const CompatibilityGraph& g, int n_, int m_, int start_value, int floor_v,
                 SearchBudget b)
        : graph(g), n(n_), m(m_), budget(b), best_value(start_value), floor_value(floor_v),
          degs(n_, 0) {}

    bool out_of_budget() {
        if (budget.max_nodes > 0 && nodes > budget.max_nodes) {
            node_budget_hit = true;
            return true;
        }
        if (budget.max_seconds > 0 && (nodes & 1023) == 0) {
            const auto dt = std::chrono::steady_clock::now() - started;
            if (dt > std::chrono::seconds(budget.max_seconds)) {
                time_budget_hit = true;
                return true;
            }
        }
        return false;
    }

    bool solved() const { return found_any && best_value <= floor_value; }

    void record() {
        found_any = true;
        std::vector<VertexSet> edges;
        for (int i : chosen) edges.push_back(graph.candidates[i]);
        best_witness = Hypergraph(n, std::move(edges), graph.candidates.front().count());
        best_value = *std::max_element(degs.begin(), degs.end());
    }

    void dfs(IndexBits avail, int cur_max) {
        ++nodes;
        if (out_of_budget() || solved()) return;
        const int need = m - static_cast<int>(chosen.size());
        if (need == 0) {
            if (cur_max < best_value || !found_any) record();
            return;
        }
        if (avail.count() < need) return;
        for (int i = avail.next_set(0); i >= 0; i = avail.next_set(i + 1)) {
            avail.reset(i);
            int new_max = cur_max;
            bool improving = true;
            graph.candidates[i].for_each([&](int v) { new_max = std::max(new_max, degs[v] + 1); });
            if (found_any && new_max >= best_value) improving = false;
            if (improving) {
                IndexBits next = avail;
                next.and_with(graph.compatible[i]);
                graph.candidates[i].for_each([&](int v) { ++degs[v]; });
                chosen.push_back(i);
                dfs(next, new_max);
                chosen.pop_back();
                graph.candidates[i].for_each([&](int v) { --degs[v]; });
            }
            if (out_of_budget() || solved()) return;
            if (avail.count() < need) return;
        }
    }
};

}  // namespace detail

/// Exact minimum of the maximum degree over family members with n vertices
/// and m edges, by branch and bound over cliques of the compatibility
/// graph.  The first edge is pinned to the colex-least k-set, which is
/// sound because relabelling preserves membership, edge count and maximum
/// degree.  Construction witnesses (balanced thick subgraph, star prefix)
/// seed the incumbent.
inline SearchReport min_max_degree(const JrtParams& p, int n, int m,
                                   SearchBudget budget = SearchBudget{}) {
    if (n < p.edge_size()) throw std::invalid_argument("min_max_degree: n < k");
    if (m < 0) throw std::invalid_argument("min_max_degree: m < 0");
    SearchReport rep;
    {
        // ceil(k m / n), exactly
        mpz_class num = mpz_class(p.edge_size()) * m;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), mpz_class(n).get_mpz_t());
        rep.lower_bound = static_cast<int>((r != 0 ? mpz_class(q + 1) : q).get_si());
    }
    if (m == 0) {
        rep.status = SearchStatus::proved_optimal;
        rep.value = 0;
        rep.upper_bound = 0;
        rep.witness = Hypergraph(n, {}, p.edge_size());
        return rep;
    }

    CompatibilityGraph graph(p, n);
    std::optional<Hypergraph> incumbent;
    for (auto& w : {detail::balanced_thick_witness(p, n, m), detail::star_prefix_witness(p, n, m)})
        if (w && is_jrt_member(p, *w).member && w->edge_count() == m)
            if (!incumbent || max_degree(*w) < max_degree(*incumbent)) incumbent = w;

    int start_value = incumbent ? max_degree(*incumbent) : m + 1;
    detail::CliqueSearch search(graph, n, m, start_value, rep.lower_bound, budget);
    if (incumbent) {
        search.found_any = true;
        search.best_witness = incumbent;
    }

    if (!(incumbent && start_value <= rep.lower_bound)) {
        // pin the first edge: candidate 0 is the colex-least k-set
        detail::IndexBits avail(graph.candidates.size());
        for (std::size_t i = 1; i < graph.candidates.size(); ++i) avail.set(i);
        avail.and_with(graph.compatible[0]);
        graph.candidates[0].for_each([&](int v) { ++search.degs[v]; });
        search.chosen.push_back(0);
        search.dfs(avail, 1);
        search.chosen.pop_back();
        graph.candidates[0].for_each([&](int v) { --search.degs[v]; });
    }

    rep.nodes = search.nodes;
    rep.node_budget_hit = search.node_budget_hit;
    rep.time_budget_hit = search.time_budget_hit;
    const bool exhausted = !search.node_budget_hit && !search.time_budget_hit;
    if (search.found_any) {
        rep.witness = search.best_witness;
        rep.upper_bound = search.best_value;
        if (exhausted || search.best_value <= rep.lower_bound) {
            rep.status = SearchStatus::proved_optimal;
            rep.value = search.best_value;
        } else {
            rep.status = SearchStatus::bounded;
        }
    } else {
        rep.status = exhausted ? SearchStatus::infeasible : SearchStatus::bounded;
    }
    return rep;
}

struct WitnessList {
    SearchStatus status = SearchStatus::proved_optimal;
    std::vector<Hypergraph> witnesses;
    bool complete = true;
    bool canonical_filtered = false;
};

/// Canonical representative under vertex relabelling: the colex-least edge
/// list over all permutations.  Exponential in n; guarded to small n.
inline Hypergraph canonical_form(const Hypergraph& h) {
    if (h.n > 9) throw capacity_error("canonical_form: n > 9");
    std::vector<int> perm(h.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<VertexSet>> best;
    do {
        std::vector<VertexSet> mapped;
        mapped.reserve(h.edges.size());
        for (const auto& e : h.edges) {
            VertexSet x;
            e.for_each([&](int v) { x.set(perm[v]); });
            mapped.push_back(x);
        }
        std::sort(mapped.begin(), mapped.end(), colex_less);
        if (!best || std::lexicographical_compare(mapped.begin(), mapped.end(), best->begin(),
                                                  best->end(), colex_less))
            best = std::move(mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Hypergraph(h.n, *best, h.uniform);
}

/// Every hypergraph attaining the resolved minimum, up to relabelling when
/// canonical filtering is on (n <= 9).
inline WitnessList extremal_witnesses(const JrtParams& p, int n, int m,
                                      SearchBudget budget = SearchBudget{},
                                      bool canonical_filter = true) {
    auto base = min_max_degree(p, n, m, budget);
    WitnessList out;
    out.status = base.status;
    if (base.status == SearchStatus::infeasible) return out;
    if (base.status != SearchStatus::proved_optimal)
        throw std::invalid_argument("extremal_witnesses: value not resolved at (n, m)");
    if (m == 0) {
        out.witnesses.push_back(Hypergraph(n, {}, p.edge_size()));
        return out;
    }
    const int target = *base.value;

    CompatibilityGraph graph(p, n);
    std::vector<Hypergraph> hits;
    std::vector<int> degs(n, 0);
    std::vector<int> chosen;
    long long nodes = 0;
    bool budget_hit = false;

    auto dfs = [&](auto&& self, detail::IndexBits avail, int cur_max) -> void {
        if (budget_hit) return;
        if (budget.max_nodes > 0 && ++nodes > budget.max_nodes) {
            budget_hit = true;
            return;
        }
        const int need = m - static_cast<int>(chosen.size());
        if (need == 0) {
            if (cur_max == target) {
                std::vector<VertexSet> edges;
                for (int i : chosen) edges.push_back(graph.candidates[i]);
                hits.push_back(Hypergraph(n, std::move(edges), p.edge_size()));
            }
            return;
        }
        if (avail.count() < need) return;
        for (int i = avail.next_set(0); i >= 0; i = avail.next_set(i + 1)) {
            avail.reset(i);
            int new_max = cur_max;
            graph.candidates[i].for_each([&](int v) { new_max = std::max(new_max, degs[v] + 1); });
            if (new_max <= target) {
                detail::IndexBits next = avail;
                next.and_with(graph.compatible[i]);
                graph.candidates[i].for_each([&](int v) { ++degs[v]; });
                chosen.push_back(i);
                self(self, next, new_max);
                chosen.pop_back();
                graph.candidates[i].for_each([&](int v) { --degs[v]; });
            }
            if (budget_hit || avail.count() < need) return;
        }
    };
    detail::IndexBits avail(graph.candidates.size());
    for (std::size_t i = 1; i < graph.candidates.size(); ++i) avail.set(i);
    avail.and_with(graph.compatible[0]);
    graph.candidates[0].for_each([&](int v) { ++degs[v]; });
    chosen.push_back(0);
    dfs(dfs, avail, 1);

    out.complete = !budget_hit;
    if (canonical_filter && n <= 9) {
        out.canonical_filtered = true;
        std::vector<Hypergraph> reduced;
        for (const auto& w : hits) {
            Hypergraph c = canonical_form(w);
            if (std::find(reduced.begin(), reduced.end(), c) == reduced.end())
                reduced.push_back(c);
        }
        out.witnesses = std::move(reduced);
    } else {
        out.witnesses = std::move(hits);
    }
    return out;
}

enum class MStrategy { none, around_transition };

struct ScanRow {
    int n = 0;
    mpz_class m_star;      // thick-clique edge count
    mpz_class thick_delta; // thick-clique maximum degree
    mpz_class star_edges;  // full-star edge count
    mpq_class bound;       // (m_star + 1) / (3t)
    std::optional<int> f_below, f_above;
    std::string status = "skipped";
};

/// Tabulates the construction formulas for each n, and (when asked) the
/// searched values just below and above the thick-clique edge count.
inline std::vector<ScanRow> phase_scan(const JrtParams& p, const std::vector<int>& ns,
                                       MStrategy strategy = MStrategy::none,
                                       SearchBudget budget = SearchBudget{}) {
    std::vector<ScanRow> rows;
    for (int n : ns) {
        ScanRow row;
        row.n = n;
        if (n < p.edge_size()) {
            rows.push_back(std::move(row));
            continue;
        }
        row.m_star = binom(n / p.t, p.ell());
        row.thick_delta = binom(n / p.t - 1, p.ell() - 1);
        row.star_edges = binom(n - p.edge_size() + p.ell(), p.ell());
        row.bound = mpq_class(row.m_star + 1, 3 * p.t);
        row.bound.canonicalize();
        if (strategy == MStrategy::around_transition && fits_int64(row.m_star)) {
            const long m_star = static_cast<long>(row.m_star.get_si());
            auto below = min_max_degree(p, n, static_cast<int>(m_star), budget);
            auto above = min_max_degree(p, n, static_cast<int>(m_star) + 1, budget);
            if (below.value) row.f_below = *below.value;
            if (above.value) row.f_above = *above.value;
            if (below.status == SearchStatus::proved_optimal &&
                above.status == SearchStatus::proved_optimal)
                row.status = "proved-optimal";
            else if (below.status == SearchStatus::infeasible ||
                     above.status == SearchStatus::infeasible)
                row.status = "infeasible";
            else
                row.status = "bounded";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "n,m_star,thick_delta,star_edges,bound_m_over_3t,f_below,f_above,status\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + ",";
        out += r.m_star.get_str() + ",";
        out += r.thick_delta.get_str() + ",";
        out += r.star_edges.get_str() + ",";
        out += r.bound.get_num().get_str();
        if (r.bound.get_den() != 1) out += "/" + r.bound.get_den().get_str();
        out += ",";
        out += (r.f_below ? std::to_string(*r.f_below) : "0") + ",";
        out += (r.f_above ? std::to_string(*r.f_above) : "0") + ",";
        out += r.status + "\n";
    }
    return out;
}

}  // namespace jrt
