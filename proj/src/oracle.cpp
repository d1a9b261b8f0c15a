#include "nsurf/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsurf/exact_linalg.hpp"

namespace nsurf {

namespace {

bool mask_violates_groups(std::uint32_t support, const std::vector<std::array<int, 3>>& groups) {
    for (const auto& g : groups) {
        int nonzero = 0;
        for (int pos : g)
            if (support >> pos & 1) ++nonzero;
        if (nonzero > 1) return true;
    }
    return false;
}

}  // namespace

std::vector<std::vector<Int>> brute_force_rays_raw(
    const std::vector<SparseRow>& rows, int dim,
    const std::vector<std::array<int, 3>>* quadGroups) {
    if (dim > 24) throw std::invalid_argument("brute_force_rays: dimension above 24");

    IntMatrix dense;
    for (const SparseRow& r : rows) {
        std::vector<Int> row(dim, 0);
        for (const auto& [p, c] : r) row[p] = c;
        dense.push_back(std::move(row));
    }
    const int fullRank = exact_rank(dense);

    // A support with a one-dimensional restricted kernel has size
    // rank(restricted) + 1 <= fullRank + 1.
    const int maxSize = std::min(dim, fullRank + 1);

    std::vector<std::uint32_t> keptSupports;
    std::vector<std::vector<Int>> keptRays;

    for (int size = 1; size <= maxSize; ++size) {
        // All dim-bit masks of the given popcount, ascending.
        std::uint32_t mask = (std::uint32_t{1} << size) - 1;
        const std::uint32_t limit = std::uint32_t{1} << dim;
        while (mask < limit) {
            bool pruned = false;
            for (std::uint32_t ks : keptSupports)
                if ((ks & mask) == ks) {
                    // A kept ray lives on a strictly smaller support: any ray
                    // on this support is a sum involving it, not extreme.
                    pruned = true;
                    break;
                }

            if (!pruned) {
                std::vector<int> cols;
                for (int i = 0; i < dim; ++i)
                    if (mask >> i & 1) cols.push_back(i);

                IntMatrix restricted;
                for (const auto& row : dense) {
                    std::vector<Int> r(cols.size());
                    bool all0 = true;
                    for (std::size_t j = 0; j < cols.size(); ++j) {
                        r[j] = row[cols[j]];
                        all0 = all0 && sgn(r[j]) == 0;
                    }
                    if (!all0) restricted.push_back(std::move(r));
                }

                IntMatrix kernel = kernel_basis(std::move(restricted), size);
                if (kernel.size() == 1) {
                    std::vector<Int>& k = kernel[0];
                    int pos = 0, negc = 0;
                    for (const Int& e : k) {
                        if (sgn(e) > 0) ++pos;
                        if (sgn(e) < 0) ++negc;
                    }
                    if (pos + negc == size && (pos == 0 || negc == 0)) {
                        if (negc > 0)
                            for (Int& e : k) e = -e;
                        std::vector<Int> ray(dim, 0);
                        for (std::size_t j = 0; j < cols.size(); ++j) ray[cols[j]] = k[j];
                        keptSupports.push_back(mask);
                        keptRays.push_back(std::move(ray));
                    }
                }
            }

            // Gosper's hack: next mask with the same popcount.
            std::uint32_t c = mask & -mask;
            std::uint32_t r = mask + c;
            if (r >= limit || c == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }

    // Minimal-support filter before the quadrilateral filter: extremality is
    // decided in the full cone, and a dropped witness must still count.
    std::vector<std::vector<Int>> result;
    for (std::size_t i = 0; i < keptRays.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < keptSupports.size(); ++j)
            if (i != j && (keptSupports[j] & keptSupports[i]) == keptSupports[j] &&
                keptSupports[j] != keptSupports[i]) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        if (quadGroups && mask_violates_groups(keptSupports[i], *quadGroups)) continue;
        result.push_back(keptRays[i]);
    }
    return result;
}

SolutionSet brute_force_rays(const MatchingSystem& m) {
    const auto groups = quad_groups(m);
    auto raw = brute_force_rays_raw(m.rows, m.dim, &groups);
    std::vector<NormalVector> vecs;
    vecs.reserve(raw.size());
    for (auto& x : raw) vecs.push_back(NormalVector(m.space, m.tets, std::move(x)));
    return make_solution_set(m.space, m.tets, std::move(vecs));
}

}  // namespace nsurf
