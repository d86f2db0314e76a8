#pragma once

#include <cstdint>
#include <vector>

#include "jrt/hypergraph.hpp"
#include "jrt/profile.hpp"

namespace jrt {

inline int smallest_prime_factor(int t) {
    for (int p = 2; p * p <= t; ++p)
        if (t % p == 0) return p;
    return t;
}

/// Rank over GF(2) of the characteristic vectors, by word-parallel
/// elimination with column pivots taken in vertex order.
inline int gf2_rank(std::vector<VertexSet> rows) {
    int rank = 0;
    const std::size_t m = rows.size();
    for (std::size_t r = 0; r < m; ++r) {
        // reduce against earlier pivot rows (rows[0..rank) hold pivots)
        for (int i = 0; i < rank; ++i) {
            int pv = rows[i].min_vertex();
            if (rows[r].test(pv)) rows[r] ^= rows[i];
        }
        if (!rows[r].empty()) {
            std::swap(rows[r], rows[rank]);
            // keep pivot rows sorted by pivot column
            for (int i = rank; i > 0 && rows[i].min_vertex() < rows[i - 1].min_vertex(); --i)
                std::swap(rows[i], rows[i - 1]);
            ++rank;
        }
    }
    return rank;
}

/// Rank over GF(p) by Gaussian elimination, pivot columns in vertex order.
inline int gfp_rank(const std::vector<VertexSet>& sets, int n, int p) {
    if (p == 2) return gf2_rank(sets);
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<std::uint8_t> row(n, 0);
        s.for_each([&](int v) { row[v] = 1; });
        rows.push_back(std::move(row));
    }
    auto inv_mod = [&](int a) {
        // p is prime, Fermat
        int r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    const int m = static_cast<int>(rows.size());
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < m; ++i)
            if (rows[i][col]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        const int inv = inv_mod(rows[rank][col]);
        for (int j = col; j < n; ++j) rows[rank][j] = rows[rank][j] * inv % p;
        for (int i = 0; i < m; ++i) {
            if (i == rank || !rows[i][col]) continue;
            const int c = rows[i][col];
            for (int j = col; j < n; ++j)
                rows[i][j] = (rows[i][j] + (p - c) * rows[rank][j]) % p;
        }
        ++rank;
    }
    return rank;
}

struct RankBoundReport {
    bool sizes_ok = false;    // every |e| ≡ 1 (mod t)
    bool divisible = false;   // pairwise intersections ≡ 0 (mod t)
    int prime = 0;            // smallest prime factor of t
    int rank = 0;
    bool independent = false; // rank == |E|
    bool count_ok = false;    // |E| <= |V|
};

/// Checks the hypotheses of the modular size bound (t-divisible, all sizes
/// ≡ 1 mod t) and computes the GF(p) rank of the characteristic vectors for
/// p the smallest prime factor of t.  Hypothesis failures are reported, not
/// thrown; rank and the |E| <= |V| comparison are filled in regardless.
inline RankBoundReport rank_bound_check(int t, const Hypergraph& s) {
    RankBoundReport rep;
    rep.sizes_ok = true;
    for (const auto& e : s.edges)
        if (e.count() % t != 1) {
            rep.sizes_ok = false;
            break;
        }
    rep.divisible = is_t_divisible(t, s);
    rep.prime = smallest_prime_factor(t);
    rep.rank = gfp_rank(s.edges, s.n, rep.prime);
    rep.independent = rep.rank == s.edge_count();
    rep.count_ok = s.edge_count() <= s.n;
    return rep;
}

}  // namespace jrt
