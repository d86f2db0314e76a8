#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "jrt/hypergraph.hpp"
#include "jrt/parallel.hpp"
#include "jrt/profile.hpp"

namespace jrt {

/// A family of edges whose pairwise intersections all equal the kernel.
/// `exact` marks the size as a proven maximum; a greedy result is only a
/// lower bound.
struct Sunflower {
    VertexSet kernel;
    std::vector<VertexSet> petals;  // full edges, each containing the kernel
    bool exact = true;

    int size() const { return static_cast<int>(petals.size()); }

    bool valid() const {
        for (std::size_t j = 0; j < petals.size(); ++j) {
            if (!kernel.subset_of(petals[j])) return false;
            for (std::size_t i = 0; i < j; ++i)
                if ((petals[i] & petals[j]) != kernel) return false;
        }
        return true;
    }
};

namespace detail {

/// Bitset over candidate indices, for the packing search.
struct IndexBits {
    std::vector<std::uint64_t> w;

    explicit IndexBits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= 1ULL << (i % 64); }
    void reset(std::size_t i) { w[i / 64] &= ~(1ULL << (i % 64)); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    void and_with(const IndexBits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    int next_set(std::size_t from) const {
        for (std::size_t b = from / 64; b < w.size(); ++b) {
            std::uint64_t word = w[b];
            if (b == from / 64) word &= ~0ULL << (from % 64);
            if (word) return static_cast<int>(b * 64 + std::countr_zero(word));
        }
        return -1;
    }
};

/// Branch-and-bound maximum disjoint packing over the given petal
/// differences.  When target > 0 the search stops as soon as `target`
/// disjoint petals are found (exact decision); otherwise it proves a
/// maximum.  Candidates are branched in the given order.
class PackingSearch {
public:
    PackingSearch(const std::vector<VertexSet>& diffs, int target)
        : diffs_(diffs), target_(target), compatible_(diffs.size(), IndexBits(diffs.size())) {
        const std::size_t c = diffs.size();
        for (std::size_t i = 0; i < c; ++i)
            for (std::size_t j = i + 1; j < c; ++j)
                if (!diffs_[i].intersects(diffs_[j])) compatible_[i].set(j);
    }

    // greedy warm start: scan in order, take whatever stays disjoint
    std::vector<int> greedy() const {
        std::vector<int> pick;
        VertexSet used;
        for (std::size_t i = 0; i < diffs_.size(); ++i)
            if (!diffs_[i].intersects(used)) {
                used |= diffs_[i];
                pick.push_back(static_cast<int>(i));
            }
        return pick;
    }

    std::vector<int> run() {
        best_ = greedy();
        if (done()) return best_;
        IndexBits all(diffs_.size());
        for (std::size_t i = 0; i < diffs_.size(); ++i) all.set(i);
        std::vector<int> pick;
        dfs(all, pick);
        return best_;
    }

private:
    bool done() const { return target_ > 0 && static_cast<int>(best_.size()) >= target_; }

    void dfs(IndexBits avail, std::vector<int>& pick) {
        if (done()) return;
        int bound = static_cast<int>(pick.size()) + avail.count();
        if (bound <= static_cast<int>(best_.size())) return;
        if (target_ > 0 && bound < target_) return;
        for (int i = avail.next_set(0); i >= 0; i = avail.next_set(i + 1)) {
            avail.reset(i);
            IndexBits next = avail;
            next.and_with(compatible_[i]);
            pick.push_back(i);
            if (pick.size() > best_.size()) best_ = pick;
            if (done()) return;
            dfs(next, pick);
            pick.pop_back();
            if (done()) return;
            if (static_cast<int>(pick.size()) + avail.count() <= static_cast<int>(best_.size()))
                return;
        }
    }

    const std::vector<VertexSet>& diffs_;
    int target_;
    std::vector<IndexBits> compatible_;
    std::vector<int> best_;
};

struct KernelCandidates {
    std::vector<VertexSet> edges;  // edges containing the kernel
    std::vector<VertexSet> diffs;  // edge minus kernel, sorted colex
};

inline KernelCandidates candidates_for_kernel(const Hypergraph& h, const VertexSet& kernel) {
    KernelCandidates out;
    for (const auto& e : h.edges)
        if (kernel.subset_of(e)) out.edges.push_back(e);
    std::sort(out.edges.begin(), out.edges.end(),
              [&](const VertexSet& a, const VertexSet& b) {
                  return colex_less(a - kernel, b - kernel);
              });
    for (const auto& e : out.edges) out.diffs.push_back(e - kernel);
    return out;
}

}  // namespace detail

inline constexpr int default_exact_budget = 24;

/// Maximum sunflower among the edges of h that contain `kernel`.  Exact
/// (branch and bound over the petal differences, ordered by colex rank)
/// when at most exact_budget edges qualify; greedy and flagged as a lower
/// bound otherwise.
inline Sunflower max_sunflower_with_kernel(const Hypergraph& h, const VertexSet& kernel,
                                           int exact_budget = default_exact_budget) {
    auto cand = detail::candidates_for_kernel(h, kernel);
    Sunflower s;
    s.kernel = kernel;
    detail::PackingSearch search(cand.diffs, 0);
    std::vector<int> pick;
    if (static_cast<int>(cand.diffs.size()) <= exact_budget) {
        pick = search.run();
        s.exact = true;
    } else {
        pick = search.greedy();
        s.exact = false;
    }
    for (int i : pick) s.petals.push_back(cand.edges[i]);
    std::sort(s.petals.begin(), s.petals.end(), colex_less);
    if (!s.valid()) throw std::logic_error("sunflower packing produced an invalid family");
    return s;
}

/// Exact decision: does h contain a sunflower with this kernel and at least
/// `count` petals?
inline bool has_sunflower_with_kernel(const Hypergraph& h, const VertexSet& kernel, int count) {
    if (count <= 0) return true;
    auto cand = detail::candidates_for_kernel(h, kernel);
    if (static_cast<int>(cand.diffs.size()) < count) return false;
    detail::PackingSearch search(cand.diffs, count);
    return static_cast<int>(search.run().size()) >= count;
}

struct SunflowerSearchResult {
    bool found = false;
    Sunflower sunflower;   // meaningful when found
    bool exact = true;     // absence is proven when every kernel was decided exactly
};

/// Searches f for a sunflower with more than `a` petals.  Candidate kernels
/// are all pairwise intersections, the empty set, and the members themselves;
/// a kernel of any sunflower with two or more petals is a pairwise
/// intersection, so the candidate list is complete.
inline SunflowerSearchResult find_sunflower(const Hypergraph& f, int a, int b) {
    for (const auto& e : f.edges)
        if (e.count() > b)
            throw std::invalid_argument("find_sunflower: member larger than the stated bound b");
    SunflowerSearchResult out;
    if (a < 1) {
        if (f.edge_count() >= 1) {
            out.found = true;
            out.sunflower.kernel = f.edges.front();
            out.sunflower.petals = {f.edges.front()};
        }
        return out;
    }
    std::vector<VertexSet> kernels;
    kernels.push_back(VertexSet{});
    for (const auto& e : f.edges) kernels.push_back(e);
    const int m = f.edge_count();
    for (int j = 1; j < m; ++j)
        for (int i = 0; i < j; ++i) kernels.push_back(f.edges[i] & f.edges[j]);
    std::sort(kernels.begin(), kernels.end(), colex_less);
    kernels.erase(std::unique(kernels.begin(), kernels.end()), kernels.end());

    for (const auto& k : kernels) {
        auto cand = detail::candidates_for_kernel(f, k);
        if (static_cast<int>(cand.diffs.size()) <= a) continue;
        detail::PackingSearch search(cand.diffs, a + 1);
        auto pick = search.run();
        if (static_cast<int>(pick.size()) > a) {
            out.found = true;
            out.sunflower.kernel = k;
            for (int i : pick) out.sunflower.petals.push_back(cand.edges[i]);
            std::sort(out.sunflower.petals.begin(), out.sunflower.petals.end(), colex_less);
            if (!out.sunflower.valid())
                throw std::logic_error("sunflower packing produced an invalid family");
            return out;
        }
    }
    return out;
}

/// The marking of small kernels used by the structure pipeline: a set f of
/// size at most rt(t-1)+1 is marked red when h contains a sunflower with
/// kernel f and at least rt^2 petals.  `top` holds the red sets of the
/// maximal size rt(t-1)+1, `rest` the remaining ones.
struct RedColouring {
    Hypergraph sets;  // every red set
    Hypergraph top;   // size exactly rt(t-1)+1
    Hypergraph rest;  // sets minus top
};

inline RedColouring red_colouring(const JrtParams& p, const Hypergraph& h) {
    const int limit = p.centre_size() + 1;
    const int need = p.edge_size();

    std::unordered_set<VertexSet> seen;
    std::vector<VertexSet> candidates;
    candidates.push_back(VertexSet{});
    seen.insert(VertexSet{});
    for (const auto& e : h.edges)
        for_each_small_subset(e, limit, [&](const VertexSet& f) {
            if (seen.insert(f).second) candidates.push_back(f);
        });
    std::sort(candidates.begin(), candidates.end(), colex_less);

    std::vector<char> red(candidates.size(), 0);
    exec::parallel_for(candidates.size(), [&](std::size_t i) {
        red[i] = has_sunflower_with_kernel(h, candidates[i], need);
    });

    RedColouring out;
    out.sets.n = out.top.n = out.rest.n = h.n;
    out.top.uniform = limit;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (!red[i]) continue;
        out.sets.edges.push_back(candidates[i]);
        if (candidates[i].count() == limit)
            out.top.edges.push_back(candidates[i]);
        else
            out.rest.edges.push_back(candidates[i]);
    }
    return out;
}

}  // namespace jrt
