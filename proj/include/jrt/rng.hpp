#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "jrt/vertex_set.hpp"

namespace jrt {

/// Seeded generator with hand-rolled bounded draws, so that identical seeds
/// give identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform value in [0, bound), bound >= 1.  Rejection sampling on the
    /// top of the range keeps the distribution exact.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * ((~0ULL) / bound);
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int range_int(int lo, int hi_exclusive) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi_exclusive - lo)));
    }

    /// Uniform random k-subset of {0,...,n-1} by partial Fisher-Yates.
    VertexSet subset(int n, int k) {
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        VertexSet s;
        for (int i = 0; i < k; ++i) {
            int j = range_int(i, n);
            std::swap(ids[i], ids[j]);
            s.set(ids[i]);
        }
        return s;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace jrt
