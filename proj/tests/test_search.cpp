#include <catch2/catch_amalgamated.hpp>

#include <optional>

#include "jrt/constructions.hpp"
#include "jrt/search.hpp"
#include "oracles.hpp"

using namespace jrt;

namespace {

/// Brute force over every m-subset of candidate edges.
std::optional<int> brute_min_max_degree(const JrtParams& p, int n, int m) {
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<VertexSet> cands;
    for_each_subset_of_size(verts, p.edge_size(), [&](const VertexSet& s) { cands.push_back(s); });
    const int c = static_cast<int>(cands.size());
    std::optional<int> best;
    std::vector<int> idx(m);
    auto consider = [&]() {
        std::vector<VertexSet> edges;
        for (int i : idx) edges.push_back(cands[i]);
        Hypergraph h(n, edges, p.edge_size());
        if (h.edge_count() != m) return;
        if (!is_jrt_member(p, h).member) return;
        int d = max_degree(h);
        if (!best || d < *best) best = d;
    };
    if (m == 0) return 0;
    if (m > c) return std::nullopt;
    // iterate combinations of indices
    for (int i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        consider();
        int i = m - 1;
        while (i >= 0 && idx[i] == c - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

}  // namespace

TEST_CASE("resolved values on the 8-vertex instance") {
    JrtParams p(1, 2);
    auto r1 = min_max_degree(p, 8, 1);
    CHECK(r1.status == SearchStatus::proved_optimal);
    CHECK(r1.value == 1);
    REQUIRE(r1.witness);
    CHECK(r1.witness->edge_count() == 1);

    auto r2 = min_max_degree(p, 8, 2);
    CHECK(r2.value == 1);

    auto r6 = min_max_degree(p, 8, 6);
    CHECK(r6.status == SearchStatus::proved_optimal);
    CHECK(r6.value == 3);
    CHECK(r6.lower_bound == 3);
    REQUIRE(r6.witness);
    CHECK(max_degree(*r6.witness) == 3);
    CHECK(is_jrt_member(p, *r6.witness).member);
}

TEST_CASE("search agrees with brute force on tiny instances") {
    JrtParams p(1, 2);
    for (int n = 4; n <= 6; ++n)
        for (int m = 0; m <= 4; ++m) {
            auto brute = brute_min_max_degree(p, n, m);
            auto mine = min_max_degree(p, n, m);
            if (brute) {
                CHECK(mine.status == SearchStatus::proved_optimal);
                CHECK(mine.value == *brute);
            } else {
                CHECK(mine.status == SearchStatus::infeasible);
                CHECK(!mine.value);
            }
        }
}

TEST_CASE("infeasible instances are reported, not thrown") {
    JrtParams p(1, 2);
    auto r = min_max_degree(p, 4, 2);
    CHECK(r.status == SearchStatus::infeasible);
    CHECK(!r.value);
    CHECK(!r.witness);
}

TEST_CASE("witnesses re-verify and the sandwich holds on resolved points") {
    JrtParams p(1, 2);
    const int n = 8;
    const int teams = n / p.t;
    int prev = 0;
    for (int m = 0; m <= 6; ++m) {
        auto r = min_max_degree(p, n, m);
        REQUIRE(r.status == SearchStatus::proved_optimal);
        REQUIRE(r.value);
        CHECK(*r.value >= r.lower_bound);
        if (m <= 6) {  // m within the thick range: f <= ceil(rt m / teams)
            const int upper = (p.ell() * m + teams - 1) / teams;
            CHECK(*r.value <= upper);
        }
        if (m > 0) {
            REQUIRE(r.witness);
            CHECK(is_jrt_member(p, *r.witness).member);
            CHECK(r.witness->edge_count() == m);
            CHECK(max_degree(*r.witness) == *r.value);
        }
        CHECK(*r.value >= prev);  // nondecreasing in m
        prev = *r.value;
    }
}

TEST_CASE("identical configurations give identical reports") {
    JrtParams p(1, 2);
    auto a = min_max_degree(p, 8, 5);
    auto b = min_max_degree(p, 8, 5);
    CHECK(a.status == b.status);
    CHECK(a.value == b.value);
    CHECK(a.nodes == b.nodes);
    CHECK(a.lower_bound == b.lower_bound);
    REQUIRE((a.witness && b.witness));
    CHECK(*a.witness == *b.witness);
}

TEST_CASE("exhausted budgets downgrade the status") {
    JrtParams p(1, 2);
    SearchBudget tiny{1, 0};
    auto r = min_max_degree(p, 8, 7, tiny);  // above the thick range: needs search
    CHECK(r.status == SearchStatus::bounded);
    CHECK(!r.value);
    CHECK(r.node_budget_hit);
    REQUIRE(r.upper_bound);  // the star prefix incumbent survives
    CHECK(*r.upper_bound == 7);
    CHECK(r.lower_bound == 4);

    auto full = min_max_degree(p, 8, 7);
    CHECK(full.status == SearchStatus::proved_optimal);
    REQUIRE(full.value);
    CHECK(*full.value >= 4);
}

TEST_CASE("witness enumeration") {
    JrtParams p(1, 2);
    auto w1 = extremal_witnesses(p, 4, 1);
    REQUIRE(w1.witnesses.size() == 1);
    CHECK(w1.witnesses[0].edges == std::vector<VertexSet>{VertexSet{0, 1, 2, 3}});

    // an infeasible point yields an empty list, not an error
    auto none = extremal_witnesses(p, 4, 2);
    CHECK(none.status == SearchStatus::infeasible);
    CHECK(none.witnesses.empty());

    auto w6 = extremal_witnesses(p, 8, 6);
    CHECK(w6.complete);
    CHECK(w6.canonical_filtered);
    auto thick = canonical_form(thick_clique(8, 4, 2).h);
    bool found = false;
    for (const auto& w : w6.witnesses) found |= w == thick;
    CHECK(found);
    for (const auto& w : w6.witnesses) {
        CHECK(max_degree(w) == 3);
        CHECK(is_jrt_member(p, w).member);
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
    auto thick = thick_clique(8, 4, 2).h;
    // relabel by an arbitrary permutation
    std::vector<int> perm{3, 5, 0, 7, 1, 6, 2, 4};
    std::vector<VertexSet> mapped;
    for (const auto& e : thick.edges) {
        VertexSet x;
        e.for_each([&](int v) { x.set(perm[v]); });
        mapped.push_back(x);
    }
    Hypergraph relabelled(8, mapped, 4);
    CHECK(canonical_form(relabelled) == canonical_form(thick));
    CHECK_THROWS_AS(canonical_form(Hypergraph(12, {})), capacity_error);
}

TEST_CASE("phase scan emits the fixed table") {
    JrtParams p(1, 2);
    auto rows = phase_scan(p, {8, 10, 12});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].m_star == 6);
    CHECK(rows[0].thick_delta == 3);
    CHECK(rows[0].star_edges == 15);
    CHECK(rows[1].thick_delta == 4);
    CHECK(rows[1].star_edges == 28);

    // the star-to-thick ratio grows strictly
    mpq_class prev(0);
    for (const auto& r : rows) {
        mpq_class ratio(r.star_edges, r.thick_delta);
        CHECK(ratio > prev);
        prev = ratio;
    }

    auto below = phase_scan(p, {3});
    CHECK(below[0].m_star == 0);
    CHECK(below[0].status == "skipped");

    auto csv = scan_csv(rows);
    CHECK(csv.rfind("n,m_star,thick_delta,star_edges,bound_m_over_3t,f_below,f_above,status\n",
                    0) == 0);
    CHECK(csv.find("8,6,3,15,7/6,0,0,skipped") != std::string::npos);
}

TEST_CASE("phase scan can search around the transition") {
    JrtParams p(1, 2);
    auto rows = phase_scan(p, {8}, MStrategy::around_transition);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].f_below == 3);
    REQUIRE(rows[0].f_above);
    CHECK(*rows[0].f_above >= 4);  // one edge beyond the thick clique costs a lot
    CHECK(rows[0].status == "proved-optimal");
}
