#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <stdexcept>

#include "nsurf/matching.hpp"
#include "nsurf/solution_set.hpp"

namespace nsurf {

// Zero-position bitmask, cached per ray so adjacency tests stay cheap.
// Fixed width: coordinate dimensions above 256 are out of desk scale here.
inline constexpr int kMaxDim = 256;

struct Mask256 {
    std::array<std::uint64_t, 4> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    friend Mask256 operator&(const Mask256& a, const Mask256& b) {
        Mask256 r;
        for (int i = 0; i < 4; ++i) r.w[i] = a.w[i] & b.w[i];
        return r;
    }

    // a subset of b?
    friend bool subset(const Mask256& a, const Mask256& b) {
        for (int i = 0; i < 4; ++i)
            if (a.w[i] & ~b.w[i]) return false;
        return true;
    }

    int popcount() const {
        int c = 0;
        for (std::uint64_t word : w) c += __builtin_popcountll(word);
        return c;
    }
};

Mask256 zero_mask(const std::vector<Int>& x);

struct Ray {
    std::vector<Int> x;
    Mask256 zeros;
};

struct RayList {
    int dim = 0;
    std::vector<Ray> rays;
};

Ray make_ray(std::vector<Int> x);

// Cooperative cancellation for long enumerations.
struct Cancelled : std::runtime_error {
    Cancelled() : std::runtime_error("cancelled") {}
};

struct RunControl {
    const std::atomic<bool>* cancel = nullptr;
    void check() const {
        if (cancel && cancel->load(std::memory_order_relaxed)) throw Cancelled();
    }
};

struct EnumStats {
    std::size_t peakList = 0;
    std::size_t finalList = 0;
};

// One double description step: intersects the cone spanned by `in` (inside
// the non-negative orthant) with the hyperplane {h . x == 0}. Keeps the rays
// with h . x == 0 and adds (u.h) w - (w.h) u for every adjacent pair with
// u.h > 0 > w.h. A pair is adjacent when no third ray of `in` vanishes on all
// common zero positions of the pair.
//
// pruneGroups: when given, newly created rays with two nonzero entries in one
// group are discarded immediately (the quadrilateral constraints; safe
// because descendants of a violating ray violate too and adjacency witnesses
// for jointly compatible pairs satisfy the constraints themselves).
//
// minCommonZeros: skip pairs with fewer common zeros; pass
// dim - 2 - rank(processed equations) for an exact necessary condition, 0 to
// disable. Output is sorted, deterministically.
RayList dd_step(const RayList& in, const SparseRow& h,
                const std::vector<std::array<int, 3>>* pruneGroups, int minCommonZeros = 0,
                const RunControl& run = {});

// Runs dd_step over every equation of m starting from the unit rays of the
// orthant, with quadrilateral pruning on, and returns the admissible extreme
// rays in canonical order.
SolutionSet enumerate_solution_set(const MatchingSystem& m, const RunControl& run = {},
                                   EnumStats* stats = nullptr);

}  // namespace nsurf
