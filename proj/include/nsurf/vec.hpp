#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nsurf {

using Int = mpz_class;

enum class Coords { Standard, Quad };

inline int coord_dim(Coords c, int tets) { return (c == Coords::Standard ? 7 : 3) * tets; }

// Standard coordinates list, per tetrahedron t, the four triangle counts
// (positions 7t..7t+3, triangle v surrounds vertex v) followed by the three
// quadrilateral counts (positions 7t+4..7t+6). Quadrilateral coordinates keep
// only the quads, at positions 3t..3t+2. Quad type k separates the edge
// {0,k+1} from the opposite edge.
inline int std_tri_pos(int tet, int vertex) { return 7 * tet + vertex; }
inline int std_quad_pos(int tet, int type) { return 7 * tet + 4 + type; }
inline int quad_pos(int tet, int type) { return 3 * tet + type; }

// Quad type whose partition separates {a,b} from the complementary pair.
// Symmetric in the two pairs: quad_type_of_pair(a,b) == the type of the
// partition {a,b} | {c,d}.
int quad_type_of_pair(int a, int b);

// A (possibly intermediate) normal coordinate vector. Entries of admissible
// solutions are non-negative, but working vectors inside the conversion
// algorithms carry negative entries too.
struct NormalVector {
    Coords space = Coords::Standard;
    int tets = 0;
    std::vector<Int> entries;

    NormalVector() = default;
    NormalVector(Coords space, int tets)
        : space(space), tets(tets), entries(coord_dim(space, tets)) {}
    NormalVector(Coords space, int tets, std::vector<Int> e)
        : space(space), tets(tets), entries(std::move(e)) {}

    int dim() const { return static_cast<int>(entries.size()); }
    bool is_zero() const;

    bool operator==(const NormalVector&) const = default;
};

// Lexicographic order on entries; vectors of equal shape assumed.
bool lex_less(const NormalVector& a, const NormalVector& b);

// gcd of absolute values of all entries; 0 for the zero vector.
Int content(const std::vector<Int>& v);

// Divides out the content. The zero vector and unit-content vectors are
// returned unchanged; signs are preserved.
NormalVector primitive(const NormalVector& v);
void make_primitive(std::vector<Int>& v);

// x dominates y when x is nonzero wherever y is nonzero (equivalently the
// zero set of x is contained in the zero set of y).
bool dominates(const NormalVector& x, const NormalVector& y);

// Strict domination additionally requires a position where y vanishes but x
// does not.
bool strictly_dominates(const NormalVector& x, const NormalVector& y);

// At most one of the three quadrilateral coordinates of each tetrahedron is
// nonzero. Applies to both coordinate systems.
bool satisfies_quad_constraints(const NormalVector& v);

std::string to_string(const NormalVector& v);

}  // namespace nsurf
