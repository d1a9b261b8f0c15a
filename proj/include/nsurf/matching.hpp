#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nsurf/skeleton.hpp"
#include "nsurf/vec.hpp"

namespace nsurf {

// Navigation data for one side of a triangle disc type: crossing face
// `viaFace` of its tetrahedron leads to the triangle disc at nbrTri, and the
// matching equation through that face reads
//     x[triPos] + x[ownQuad] == x[nbrTri] + x[nbrQuad].
struct TriangleAdjacency {
    int viaFace = -1;
    int nbrTri = -1;   // standard position of the neighbouring triangle type
    int ownQuad = -1;  // standard position of the quad correction on this side
    int nbrQuad = -1;  // standard position of the quad correction on the far side
};

// One equation row, stored sparse: sum of coeff * x[pos] over the terms,
// terms sorted by position, coefficients nonzero.
using SparseRow = std::vector<std::pair<int, int>>;

Int row_dot(const SparseRow& row, const std::vector<Int>& x);

// Exact integer equality constraints cutting out a solution cone inside the
// non-negative orthant. For standard coordinates the rows are the triangle
// matching equations, three per internal face; for quadrilateral coordinates
// one row per internal edge class.
struct MatchingSystem {
    Coords space = Coords::Standard;
    int tets = 0;
    int dim = 0;
    std::vector<SparseRow> rows;

    // Standard systems only: per triangle slot (4 per tetrahedron, indexed
    // 4*tet+vertex), the vertex class and up to three glued-face adjacencies.
    std::vector<int> triVertexClass;
    std::vector<std::array<TriangleAdjacency, 3>> triAdj;
    int vertexClassCount = 0;
};

MatchingSystem standard_matching_system(const Triangulation& t, const Skeleton& s);
MatchingSystem quad_matching_system(const Triangulation& t, const Skeleton& s);

// Per-tetrahedron quad position triples, for the one-nonzero-quad-per-
// tetrahedron constraint.
std::vector<std::array<int, 3>> quad_groups(const MatchingSystem& m);

bool satisfies_equations(const NormalVector& v, const MatchingSystem& m);

// Non-negative, satisfies every matching equation, and satisfies the
// quadrilateral constraints.
bool is_admissible(const NormalVector& v, const MatchingSystem& m);

// The standard vector with a 1 at every triangle position of vertex class v
// and zeros elsewhere: the normal surface tracing the boundary of a small
// neighbourhood of that vertex.
NormalVector vertex_link(const Skeleton& s, int vertexClass);

// Drops the triangle coordinates. Linear before the final reduction to
// primitive form.
NormalVector project(const NormalVector& std);
NormalVector project_raw(const NormalVector& std);

// Minimum triangle entry around each vertex class is zero.
bool is_canonical(const NormalVector& std, const Skeleton& s);

// Subtracts from w the multiple of each vertex link that brings the minimum
// triangle entry of that class to zero. Triangle entries may be negative on
// input. Identity exactly on canonical vectors.
NormalVector canonical_part(const NormalVector& w, const Skeleton& s);

// Same adjustment for a single vertex class. canonical_part is the
// composition of the partial maps over all classes, in any order.
NormalVector partial_canonical_part(const NormalVector& w, int vertexClass, const Skeleton& s);

// Zeros the triangle coordinates of every vertex class with index >= firstCut.
// truncate(w, 0) clears all triangle coordinates; truncate(w, classCount) is
// the identity.
NormalVector truncate(const NormalVector& w, int firstCut, const Skeleton& s);

// The unique admissible standard vector with quad part w and canonical
// triangle part. Seeds one triangle entry of each vertex class at zero,
// propagates the matching equations across glued faces by depth-first search
// (linear time), then subtracts vertex links to reach canonical form; the
// result does not depend on the seeds. Throws std::invalid_argument when w is
// not admissible for the quadrilateral system, reporting the violation.
//
// seeds: optional per-class override of the starting triangle slot (index
// into the class member list), used to exercise seed independence.
NormalVector canonical_extension(const NormalVector& w, const MatchingSystem& mstd,
                                 const Skeleton& s,
                                 const std::vector<int>* seeds = nullptr);

}  // namespace nsurf
