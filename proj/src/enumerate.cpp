#include "nsurf/enumerate.hpp"

#include <algorithm>

#include "nsurf/exact_linalg.hpp"

namespace nsurf {

Mask256 zero_mask(const std::vector<Int>& x) {
    Mask256 m;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) == 0) m.set(static_cast<int>(i));
    return m;
}

Ray make_ray(std::vector<Int> x) {
    Ray r;
    r.zeros = zero_mask(x);
    r.x = std::move(x);
    return r;
}

namespace {

bool violates_groups(const std::vector<Int>& x, const std::vector<std::array<int, 3>>& groups) {
    for (const auto& g : groups) {
        int nonzero = 0;
        for (int pos : g)
            if (sgn(x[pos]) != 0) ++nonzero;
        if (nonzero > 1) return true;
    }
    return false;
}

void sort_rays(std::vector<Ray>& rays) {
    std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) {
        for (std::size_t i = 0; i < a.x.size(); ++i) {
            int c = cmp(a.x[i], b.x[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [](const Ray& a, const Ray& b) { return a.x == b.x; }),
               rays.end());
}

}  // namespace

RayList dd_step(const RayList& in, const SparseRow& h,
                const std::vector<std::array<int, 3>>* pruneGroups, int minCommonZeros,
                const RunControl& run) {
    const std::size_t k = in.rays.size();
    std::vector<Int> dot(k);
    std::vector<int> pos, neg;
    RayList out;
    out.dim = in.dim;

    for (std::size_t i = 0; i < k; ++i) {
        dot[i] = row_dot(h, in.rays[i].x);
        int s = sgn(dot[i]);
        if (s == 0)
            out.rays.push_back(in.rays[i]);
        else if (s > 0)
            pos.push_back(static_cast<int>(i));
        else
            neg.push_back(static_cast<int>(i));
    }

    // A child's support is exactly the union of its parents' supports, so
    // when pruning is on, a pair whose union already breaks a group cannot
    // contribute; skip it before the witness scan. Per ray and group, a
    // 3-bit mask of the group's non-zero positions.
    const std::size_t nGroups = pruneGroups ? pruneGroups->size() : 0;
    std::vector<std::uint8_t> groupMask(k * nGroups, 0);
    for (std::size_t i = 0; i < k && nGroups > 0; ++i)
        for (std::size_t g = 0; g < nGroups; ++g) {
            std::uint8_t mk = 0;
            for (int b = 0; b < 3; ++b)
                if (!in.rays[i].zeros.test((*pruneGroups)[g][b])) mk |= std::uint8_t(1) << b;
            groupMask[i * nGroups + g] = mk;
        }
    constexpr std::uint8_t kPop3[8] = {0, 1, 1, 2, 1, 2, 2, 3};
    auto union_violates = [&](std::size_t i, std::size_t j) {
        for (std::size_t g = 0; g < nGroups; ++g)
            if (kPop3[groupMask[i * nGroups + g] | groupMask[j * nGroups + g]] > 1) return true;
        return false;
    };

    for (int i : pos) {
        run.check();
        for (int j : neg) {
            const Mask256 common = in.rays[i].zeros & in.rays[j].zeros;
            if (common.popcount() < minCommonZeros) continue;
            if (union_violates(i, j)) continue;

            bool adjacent = true;
            for (std::size_t z = 0; z < k; ++z) {
                if (z == static_cast<std::size_t>(i) || z == static_cast<std::size_t>(j)) continue;
                if (subset(common, in.rays[z].zeros)) {
                    adjacent = false;
                    break;
                }
            }
            if (!adjacent) continue;

            std::vector<Int> x(in.dim);
            const auto& xi = in.rays[i].x;
            const auto& xj = in.rays[j].x;
            for (int c = 0; c < in.dim; ++c) x[c] = dot[i] * xj[c] - dot[j] * xi[c];
            make_primitive(x);
            if (pruneGroups && violates_groups(x, *pruneGroups)) continue;
            out.rays.push_back(make_ray(std::move(x)));
        }
    }

    sort_rays(out.rays);
    return out;
}

SolutionSet enumerate_solution_set(const MatchingSystem& m, const RunControl& run,
                                   EnumStats* stats) {
    if (m.dim > kMaxDim)
        throw std::invalid_argument("enumerate_solution_set: dimension above supported bound");

    RayList rays;
    rays.dim = m.dim;
    for (int i = 0; i < m.dim; ++i) {
        std::vector<Int> x(m.dim);
        x[i] = 1;
        rays.rays.push_back(make_ray(std::move(x)));
    }

    const auto groups = quad_groups(m);

    // Adjacent pairs in the cone cut out by the first k equations share at
    // least dim - 2 - rank(first k equations) zero positions; track the ranks
    // to skip hopeless pairs early.
    IntMatrix processed;
    int rank = 0;

    std::size_t peak = rays.rays.size();
    for (const SparseRow& row : m.rows) {
        run.check();
        const int minCommon = std::max(0, m.dim - 2 - rank);
        rays = dd_step(rays, row, &groups, minCommon, run);
        peak = std::max(peak, rays.rays.size());

        std::vector<Int> dense(m.dim, 0);
        for (const auto& [p, c] : row) dense[p] = c;
        processed.push_back(std::move(dense));
        rank = exact_rank(processed);
    }

    std::vector<NormalVector> vecs;
    for (Ray& r : rays.rays) {
        NormalVector v(m.space, m.tets, std::move(r.x));
        if (satisfies_quad_constraints(v)) vecs.push_back(std::move(v));
    }
    if (stats) {
        stats->peakList = peak;
        stats->finalList = vecs.size();
    }
    return make_solution_set(m.space, m.tets, std::move(vecs));
}

}  // namespace nsurf
