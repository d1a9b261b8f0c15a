#include <algorithm>
#include <atomic>
#include <random>
#include <vector>

#include "doctest.h"
#include "nsurf/enumerate.hpp"
#include "nsurf/oracle.hpp"
#include "support/gen.hpp"
#include "support/helpers.hpp"

using namespace nsurf;

namespace {

std::vector<Int> iv(const std::vector<long>& e) {
    std::vector<Int> v(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i];
    return v;
}

RayList units(int dim) {
    RayList list;
    list.dim = dim;
    for (int i = 0; i < dim; ++i) {
        std::vector<Int> x(dim);
        x[i] = 1;
        list.rays.push_back(make_ray(std::move(x)));
    }
    return list;
}

// Full double description run with no quadrilateral pruning: the extreme
// rays of {rows . x = 0, x >= 0}.
RayList unpruned_cone(const std::vector<SparseRow>& rows, int dim) {
    RayList list = units(dim);
    for (const SparseRow& row : rows) list = dd_step(list, row, nullptr);
    return list;
}

const std::string kDoubleTwoTet =
    "tetrahedra: 2\n"
    "glue 0 0 : 1 0 : 0 1 2 3\n"
    "glue 0 1 : 1 1 : 0 1 2 3\n"
    "glue 0 2 : 1 2 : 0 1 2 3\n"
    "glue 0 3 : 1 3 : 0 1 2 3\n";

}  // namespace

TEST_CASE("a double description step slices the orthant with one hyperplane") {
    SparseRow h = {{0, 1}, {1, -1}};
    RayList out = dd_step(units(3), h, nullptr);
    REQUIRE(out.rays.size() == 2);
    CHECK(out.rays[0].x == iv({0, 0, 1}));
    CHECK(out.rays[1].x == iv({1, 1, 0}));
    CHECK(out.rays[1].zeros.test(2));
    CHECK_FALSE(out.rays[1].zeros.test(0));
    CHECK(out.rays[0].zeros.popcount() == 2);
}

TEST_CASE("rays on the hyperplane pass through unchanged") {
    RayList out = dd_step(units(3), SparseRow{}, nullptr);
    REQUIRE(out.rays.size() == 3);
    // Output comes back in ascending lexicographic order.
    for (int i = 0; i < 3; ++i) CHECK(out.rays[i].x == units(3).rays[2 - i].x);

    // x2 = 0 keeps the two rays inside the plane and creates nothing new.
    out = dd_step(units(3), SparseRow{{2, 5}}, nullptr);
    REQUIRE(out.rays.size() == 2);
    CHECK(out.rays[0].x == iv({0, 1, 0}));
    CHECK(out.rays[1].x == iv({1, 0, 0}));
}

TEST_CASE("children are reduced to primitive vectors") {
    RayList in;
    in.dim = 3;
    in.rays.push_back(make_ray(iv({4, 0, 0})));
    in.rays.push_back(make_ray(iv({0, 6, 0})));
    RayList out = dd_step(in, SparseRow{{0, 1}, {1, -1}}, nullptr);
    REQUIRE(out.rays.size() == 1);
    CHECK(out.rays[0].x == iv({1, 1, 0}));
}

TEST_CASE("quadrilateral pruning discards violating children immediately") {
    std::vector<std::array<int, 3>> groups = {{0, 1, 2}};
    SparseRow h = {{0, 1}, {1, -1}};

    RayList pruned = dd_step(units(3), h, &groups);
    REQUIRE(pruned.rays.size() == 1);
    CHECK(pruned.rays[0].x == iv({0, 0, 1}));

    RayList full = dd_step(units(3), h, nullptr);
    CHECK(full.rays.size() == 2);
}

TEST_CASE("a pair filter on common zeros only skips hopeless pairs") {
    // With no equations processed the exact bound is dim - 2 common zeros.
    SparseRow h = {{0, 1}, {1, -1}};
    RayList strict = dd_step(units(3), h, nullptr, 3 - 2);
    RayList loose = dd_step(units(3), h, nullptr, 0);
    REQUIRE(strict.rays.size() == loose.rays.size());
    for (std::size_t i = 0; i < strict.rays.size(); ++i)
        CHECK(strict.rays[i].x == loose.rays[i].x);
}

TEST_CASE("a single tetrahedron enumerates to the unit discs") {
    Triangulation t = parse_triangulation("tetrahedra: 1\n");
    Skeleton s = build_skeleton(t);

    SolutionSet std7 = enumerate_solution_set(standard_matching_system(t, s));
    REQUIRE(std7.rays.size() == 7);
    for (int i = 0; i < 7; ++i) {
        CHECK(std7.rays[i].space == Coords::Standard);
        Int sum = 0;
        for (const Int& e : std7.rays[i].entries) sum += e;
        CHECK(sum == 1);
    }

    SolutionSet quad3 = enumerate_solution_set(quad_matching_system(t, s));
    REQUIRE(quad3.rays.size() == 3);
    for (int i = 0; i < 3; ++i) {
        Int sum = 0;
        for (const Int& e : quad3.rays[i].entries) sum += e;
        CHECK(sum == 1);
    }
}

TEST_CASE("the empty triangulation enumerates to the empty set") {
    Triangulation t = parse_triangulation("tetrahedra: 0\n");
    Skeleton s = build_skeleton(t);
    SolutionSet out = enumerate_solution_set(standard_matching_system(t, s));
    CHECK(out.space == Coords::Standard);
    CHECK(out.tets == 0);
    CHECK(out.rays.empty());
}

TEST_CASE("enumeration does not depend on the equation order") {
    std::mt19937_64 rng(440);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 1 + int(rng() % 3);
        Triangulation t = testgen::random_compact_triangulation(n, rng);
        Skeleton s = build_skeleton(t);
        for (MatchingSystem m :
             {quad_matching_system(t, s),
              n <= 2 ? standard_matching_system(t, s) : quad_matching_system(t, s)}) {
            SolutionSet base = enumerate_solution_set(m);
            for (int round = 0; round < 2; ++round) {
                MatchingSystem shuffled = m;
                std::shuffle(shuffled.rows.begin(), shuffled.rows.end(), rng);
                CHECK(enumerate_solution_set(shuffled) == base);
            }
        }
    }
}

TEST_CASE("enumeration commutes with relabeling") {
    std::mt19937_64 rng(2235);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 2 + int(rng() % 2);
        Triangulation t = testgen::random_compact_triangulation(n, rng);
        Skeleton s = build_skeleton(t);
        std::vector<int> sigma;
        std::vector<Perm4> vperm;
        testgen::random_relabeling(n, rng, sigma, vperm);
        Triangulation t2 = testgen::relabel(t, sigma, vperm);
        Skeleton s2 = build_skeleton(t2);

        for (Coords space : {Coords::Quad, Coords::Standard}) {
            if (space == Coords::Standard && n > 2) continue;
            MatchingSystem m = space == Coords::Quad ? quad_matching_system(t, s)
                                                     : standard_matching_system(t, s);
            MatchingSystem m2 = space == Coords::Quad ? quad_matching_system(t2, s2)
                                                      : standard_matching_system(t2, s2);
            std::vector<int> map = testgen::induced_position_map(space, n, sigma, vperm);

            std::vector<NormalVector> mapped;
            for (const NormalVector& r : enumerate_solution_set(m).rays)
                mapped.push_back(testgen::apply_position_map(r, map));
            CHECK(make_solution_set(space, n, std::move(mapped)) == enumerate_solution_set(m2));
        }
    }
}

TEST_CASE("enumeration agrees with the support-pattern oracle") {
    for (const Triangulation& t : testgen::compact_catalog(1)) {
        Skeleton s = build_skeleton(t);
        for (MatchingSystem m : {standard_matching_system(t, s), quad_matching_system(t, s)})
            CHECK(enumerate_solution_set(m) == brute_force_rays(m));
    }

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        Triangulation t = testgen::random_compact_triangulation(2, rng);
        Skeleton s = build_skeleton(t);
        for (MatchingSystem m : {standard_matching_system(t, s), quad_matching_system(t, s)})
            CHECK(enumerate_solution_set(m) == brute_force_rays(m));
    }
}

TEST_CASE("enumerated rays are admissible, primitive and support-incomparable") {
    std::mt19937_64 rng(86);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 1 + int(rng() % 3);
        Triangulation t = testgen::random_compact_triangulation(n, rng);
        Skeleton s = build_skeleton(t);
        for (MatchingSystem m :
             {quad_matching_system(t, s),
              n <= 2 ? standard_matching_system(t, s) : quad_matching_system(t, s)}) {
            SolutionSet out = enumerate_solution_set(m);
            for (std::size_t i = 0; i < out.rays.size(); ++i) {
                CHECK(is_admissible(out.rays[i], m));
                CHECK(content(out.rays[i].entries) == 1);
                for (std::size_t j = i + 1; j < out.rays.size(); ++j) {
                    CHECK_FALSE(dominates(out.rays[i], out.rays[j]));
                    CHECK_FALSE(dominates(out.rays[j], out.rays[i]));
                }
            }
        }
    }
}

TEST_CASE("pruned enumeration equals the unpruned cone filtered to admissibility") {
    std::mt19937_64 rng(5723);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 1 + int(rng() % 3);
        Triangulation t = testgen::random_compact_triangulation(n, rng);
        Skeleton s = build_skeleton(t);
        for (MatchingSystem m :
             {quad_matching_system(t, s),
              n <= 2 ? standard_matching_system(t, s) : quad_matching_system(t, s)}) {
            RayList cone = unpruned_cone(m.rows, m.dim);
            std::vector<NormalVector> filtered;
            for (Ray& r : cone.rays) {
                NormalVector v(m.space, m.tets, std::move(r.x));
                if (satisfies_quad_constraints(v)) filtered.push_back(std::move(v));
            }
            CHECK(make_solution_set(m.space, m.tets, std::move(filtered)) ==
                  enumerate_solution_set(m));
        }
    }
}

TEST_CASE("combinatorial adjacency matches the rank characterization") {
    auto check_system = [](const MatchingSystem& m) {
        RayList cone = unpruned_cone(m.rows, m.dim);
        const auto& rays = cone.rays;
        if (rays.size() > 60) return;
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t j = i + 1; j < rays.size(); ++j) {
                Mask256 common = rays[i].zeros & rays[j].zeros;
                bool combinatorial = true;
                for (std::size_t z = 0; z < rays.size(); ++z) {
                    if (z == i || z == j) continue;
                    if (subset(common, rays[z].zeros)) {
                        combinatorial = false;
                        break;
                    }
                }
                CHECK(combinatorial ==
                      testsup::cone_adjacent_rank(m.rows, m.dim, rays[i].x, rays[j].x));
            }
    };

    for (const Triangulation& t : testgen::compact_catalog(1)) {
        Skeleton s = build_skeleton(t);
        check_system(standard_matching_system(t, s));
        check_system(quad_matching_system(t, s));
    }
    {
        Triangulation t = parse_triangulation(kDoubleTwoTet);
        Skeleton s = build_skeleton(t);
        check_system(quad_matching_system(t, s));
    }
    std::mt19937_64 rng(3111);
    for (int trial = 0; trial < 4; ++trial) {
        Triangulation t = testgen::random_compact_triangulation(3, rng);
        Skeleton s = build_skeleton(t);
        check_system(quad_matching_system(t, s));
    }
}

TEST_CASE("enumeration statistics track the working list") {
    Triangulation t = parse_triangulation(kDoubleTwoTet);
    Skeleton s = build_skeleton(t);
    MatchingSystem m = standard_matching_system(t, s);
    EnumStats stats;
    SolutionSet out = enumerate_solution_set(m, {}, &stats);
    CHECK(stats.finalList == out.rays.size());
    CHECK(stats.peakList >= stats.finalList);
    CHECK(stats.peakList >= std::size_t(m.dim));
}

TEST_CASE("enumeration can be cancelled") {
    Triangulation t = parse_triangulation(kDoubleTwoTet);
    Skeleton s = build_skeleton(t);
    MatchingSystem m = standard_matching_system(t, s);
    std::atomic<bool> cancel{true};
    RunControl run{&cancel};
    CHECK_THROWS_AS(enumerate_solution_set(m, run), Cancelled);
}

TEST_CASE("dimensions beyond the mask width are rejected") {
    MatchingSystem m;
    m.space = Coords::Quad;
    m.tets = 100;
    m.dim = 300;
    CHECK_THROWS_AS(enumerate_solution_set(m), std::invalid_argument);
}
