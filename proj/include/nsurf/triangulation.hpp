#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsurf/perm4.hpp"

namespace nsurf {

struct FaceRef {
    int tet = 0;
    int face = 0;
    bool operator==(const FaceRef&) const = default;
    auto operator<=>(const FaceRef&) const = default;
};

// One side of a face identification: this face is glued to `to` via `perm`,
// an affine map sending vertex v of the source tetrahedron to vertex perm(v)
// of the target. perm maps the source face index to the target face index.
struct Gluing {
    FaceRef to;
    Perm4 perm;
};

// A generalised triangulation: n tetrahedra with faces identified in pairs.
// Face i of a tetrahedron is the face opposite vertex i. The gluing map is a
// fixed-point-free involution on the glued faces: if gluing(t1,f1) = (t2,f2,p)
// then gluing(t2,f2) = (t1,f1,p^-1), and (t1,f1) != (t2,f2). Unglued faces
// are boundary faces.
struct Triangulation {
    int tets = 0;
    // gluings[t][f]: identification of face f of tetrahedron t, if any.
    std::vector<std::array<std::optional<Gluing>, 4>> gluings;

    bool glued(int tet, int face) const { return gluings[tet][face].has_value(); }

    bool operator==(const Triangulation& o) const;
};

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line, int column = 0);
};

// Reads the plain-text gluing format:
//
//   % comment
//   tetrahedra: N
//   glue T1 F1 : T2 F2 : P0 P1 P2 P3
//
// Each `glue` line records one face-identification orbit; the reverse gluing
// is implied. Vertex v of T1 maps to vertex Pv of T2, and P(F1) must equal
// F2. Faces not mentioned are boundary faces. Throws ParseError with
// line/column positions on syntax errors, out-of-range indices, non-permutation
// entries, gluings that do not carry F1 to F2, faces glued twice, and
// self-identified faces.
Triangulation parse_triangulation(const std::string& text);

// Canonical form: one line per orbit, keyed by its lexicographically smaller
// side, lines sorted. parse(serialize(T)) == T.
std::string serialize_triangulation(const Triangulation& t);

}  // namespace nsurf
