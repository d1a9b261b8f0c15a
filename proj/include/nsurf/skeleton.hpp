#pragma once

#include <array>
#include <string>
#include <vector>

#include "nsurf/triangulation.hpp"

namespace nsurf {

// Vertex pairs {0,1},{0,2},{0,3},{1,2},{1,3},{2,3} index the six edges of a
// tetrahedron.
inline constexpr std::array<std::array<int, 2>, 6> kEdgePairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int edge_pair_index(int a, int b);

// One appearance of an edge class inside a tetrahedron, oriented along the
// class: `lower` and `upper` are the endpoint labels, consistent across each
// gluing of consecutive embeddings. Walking the class enters this tetrahedron
// across `enterFace` and leaves across `exitFace`; both faces contain the
// edge. For the ends of a boundary arc the outward face is a boundary face.
struct EdgeEmbedding {
    int tet = 0;
    int lower = 0;
    int upper = 0;
    int enterFace = 0;
    int exitFace = 0;
    bool operator==(const EdgeEmbedding&) const = default;
};

struct EdgeCycle {
    bool boundary = false;  // open arc (ends on boundary faces) vs closed cycle
    std::vector<EdgeEmbedding> embeddings;
};

// Identified 0-, 1- and 2-dimensional faces of a triangulation. Class indices
// are 0-based and assigned in first-appearance order scanning tetrahedra in
// order and vertices/edge pairs/faces in label order.
struct Skeleton {
    int tets = 0;
    int vertexClassCount = 0;
    int edgeClassCount = 0;
    int faceClassCount = 0;

    std::vector<std::array<int, 4>> vertexClass;  // [tet][vertex]
    std::vector<std::array<int, 6>> edgeClass;    // [tet][edge pair index]
    std::vector<std::array<int, 4>> faceClass;    // [tet][face]

    std::vector<FaceRef> boundaryFaces;  // sorted
    std::vector<std::vector<std::pair<int, int>>> vertexClassMembers;  // class -> (tet, vertex)
    std::vector<EdgeCycle> edgeCycles;  // one per edge class

    bool closed() const { return boundaryFaces.empty(); }
};

// An edge glued to itself in reverse has no consistent endpoint labelling;
// such gluings do not describe a triangulated manifold and are rejected.
struct InvalidEdgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Skeleton build_skeleton(const Triangulation& t);

struct VertexLinkInfo {
    int eulerChar = 0;
    bool boundary = false;
};

struct ValidationReport {
    bool isCompact = false;
    std::vector<VertexLinkInfo> perVertex;
    std::vector<std::string> failures;
};

// A triangulation is compact-valid when every vertex link is a disc
// (Euler characteristic 1, with boundary) or a 2-sphere (Euler characteristic
// 2, closed). Ideal triangulations fail here: a cusp has a higher-genus link.
ValidationReport validate_compact(const Triangulation& t, const Skeleton& s);

}  // namespace nsurf
