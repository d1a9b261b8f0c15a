#pragma once

#include <random>
#include <vector>

#include "nsurf/skeleton.hpp"
#include "nsurf/vec.hpp"

// Triangulation generators and relabeling utilities shared by the unit and
// acceptance tests.
namespace nsurf::testgen {

// The six permutations of {0,1,2,3} carrying f1 to f2, in a fixed order.
std::vector<Perm4> face_perms(int f1, int f2);

// Random gluing layout: each face is left on the boundary with probability
// boundaryProb, otherwise paired with another free face under a uniformly
// random face-carrying permutation. Valid as a triangulation, but not
// necessarily compact.
Triangulation random_triangulation(int n, std::mt19937_64& rng, double boundaryProb = 0.3);

// Rejection-samples random_triangulation until validate_compact accepts.
Triangulation random_compact_triangulation(int n, std::mt19937_64& rng,
                                           double boundaryProb = 0.3);

// Renames tetrahedron t to sigma[t] and its vertices by vperm[t].
Triangulation relabel(const Triangulation& t, const std::vector<int>& sigma,
                      const std::vector<Perm4>& vperm);

// The coordinate permutation induced by relabel: position i of a vector on
// the original triangulation becomes position map[i] on the relabeled one.
std::vector<int> induced_position_map(Coords space, int n, const std::vector<int>& sigma,
                                      const std::vector<Perm4>& vperm);

NormalVector apply_position_map(const NormalVector& v, const std::vector<int>& map);

// Draws a random relabeling (sigma, vperm) of n tetrahedra.
void random_relabeling(int n, std::mt19937_64& rng, std::vector<int>& sigma,
                       std::vector<Perm4>& vperm);

// Byte encoding of the gluing table that is minimal over all relabelings.
// Cost n! * 24^n relabelings; intended for n <= 3.
std::vector<std::uint8_t> canonical_form(const Triangulation& t);

// Every compact triangulation with exactly n tetrahedra, up to relabeling:
// exhaustive search over all gluing involutions, filtered by build_skeleton
// and validate_compact, deduplicated by canonical_form. Feasible for n <= 2.
std::vector<Triangulation> compact_catalog(int n);

}  // namespace nsurf::testgen
