#include "nsurf/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsurf {

namespace {

void check_shape(const NormalVector& v, const MatchingSystem& m, const char* op) {
    if (v.space != m.space || v.tets != m.tets || v.dim() != m.dim)
        throw std::invalid_argument(std::string(op) + ": vector does not match system shape");
}

// Combines duplicate positions, drops zero coefficients, sorts by position.
SparseRow normalize_row(std::vector<std::pair<int, int>> terms) {
    std::sort(terms.begin(), terms.end());
    SparseRow row;
    for (const auto& [pos, coef] : terms) {
        if (!row.empty() && row.back().first == pos)
            row.back().second += coef;
        else
            row.push_back({pos, coef});
    }
    std::erase_if(row, [](const auto& t) { return t.second == 0; });
    return row;
}

}  // namespace

Int row_dot(const SparseRow& row, const std::vector<Int>& x) {
    Int acc = 0;
    for (const auto& [pos, coef] : row) acc += coef * x[pos];
    return acc;
}

MatchingSystem standard_matching_system(const Triangulation& t, const Skeleton& s) {
    const int n = t.tets;
    MatchingSystem m;
    m.space = Coords::Standard;
    m.tets = n;
    m.dim = 7 * n;
    m.vertexClassCount = s.vertexClassCount;
    m.triVertexClass.assign(4 * n, -1);
    m.triAdj.assign(4 * n, {});

    for (int tet = 0; tet < n; ++tet)
        for (int v = 0; v < 4; ++v) m.triVertexClass[4 * tet + v] = s.vertexClass[tet][v];

    // One equation per edge {x,y} of each internal face: the triangle and
    // quad types meeting the face in arcs parallel to that edge agree across
    // the gluing. On each side the triangle surrounds the remaining face
    // vertex a, and the quad is the type separating {x,y} from {a, f}.
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluings[tet][f];
            if (!g) continue;
            const Perm4& p = g->perm;
            const int tet2 = g->to.tet;
            const int f2 = g->to.face;

            for (int a = 0; a < 4; ++a) {
                if (a == f) continue;
                const int b = quad_type_of_pair(a, f);
                const int c = p(a);
                const int d = quad_type_of_pair(c, f2);
                m.triAdj[4 * tet + a][f < a ? f : f - 1] = {f, std_tri_pos(tet2, c),
                                                            std_quad_pos(tet, b),
                                                            std_quad_pos(tet2, d)};
                if (FaceRef{tet, f} < g->to)
                    m.rows.push_back(normalize_row({{std_tri_pos(tet, a), 1},
                                                    {std_quad_pos(tet, b), 1},
                                                    {std_tri_pos(tet2, c), -1},
                                                    {std_quad_pos(tet2, d), -1}}));
            }
        }
    return m;
}

MatchingSystem quad_matching_system(const Triangulation& t, const Skeleton& s) {
    MatchingSystem m;
    m.space = Coords::Quad;
    m.tets = t.tets;
    m.dim = 3 * t.tets;

    // One equation per internal edge class: walking its cycle of embeddings,
    // the quads rising from the lower end of the edge to the upper end must
    // balance the quads falling the other way. In an embedding entered across
    // the face opposite x and exited across the face opposite y, the upward
    // quad separates {lower, y} from {upper, x} and the downward quad
    // separates {lower, x} from {upper, y}.
    for (const EdgeCycle& cyc : s.edgeCycles) {
        if (cyc.boundary) continue;
        std::vector<std::pair<int, int>> terms;
        for (const EdgeEmbedding& e : cyc.embeddings) {
            const int up = quad_type_of_pair(e.lower, e.exitFace);
            const int down = quad_type_of_pair(e.lower, e.enterFace);
            terms.push_back({quad_pos(e.tet, up), 1});
            terms.push_back({quad_pos(e.tet, down), -1});
        }
        m.rows.push_back(normalize_row(std::move(terms)));
    }
    return m;
}

std::vector<std::array<int, 3>> quad_groups(const MatchingSystem& m) {
    std::vector<std::array<int, 3>> groups(m.tets);
    for (int t = 0; t < m.tets; ++t) {
        if (m.space == Coords::Standard)
            groups[t] = {std_quad_pos(t, 0), std_quad_pos(t, 1), std_quad_pos(t, 2)};
        else
            groups[t] = {quad_pos(t, 0), quad_pos(t, 1), quad_pos(t, 2)};
    }
    return groups;
}

bool satisfies_equations(const NormalVector& v, const MatchingSystem& m) {
    check_shape(v, m, "satisfies_equations");
    for (const auto& row : m.rows)
        if (sgn(row_dot(row, v.entries)) != 0) return false;
    return true;
}

bool is_admissible(const NormalVector& v, const MatchingSystem& m) {
    check_shape(v, m, "is_admissible");
    for (const Int& e : v.entries)
        if (sgn(e) < 0) return false;
    return satisfies_quad_constraints(v) && satisfies_equations(v, m);
}

NormalVector vertex_link(const Skeleton& s, int vertexClass) {
    if (vertexClass < 0 || vertexClass >= s.vertexClassCount)
        throw std::invalid_argument("vertex_link: class index out of range");
    NormalVector v(Coords::Standard, s.tets);
    for (auto [tet, vtx] : s.vertexClassMembers[vertexClass])
        v.entries[std_tri_pos(tet, vtx)] = 1;
    return v;
}

NormalVector project_raw(const NormalVector& std) {
    if (std.space != Coords::Standard)
        throw std::invalid_argument("project: expected standard coordinates");
    NormalVector q(Coords::Quad, std.tets);
    for (int t = 0; t < std.tets; ++t)
        for (int k = 0; k < 3; ++k) q.entries[quad_pos(t, k)] = std.entries[std_quad_pos(t, k)];
    return q;
}

NormalVector project(const NormalVector& std) { return primitive(project_raw(std)); }

bool is_canonical(const NormalVector& std, const Skeleton& s) {
    if (std.space != Coords::Standard || std.tets != s.tets)
        throw std::invalid_argument("is_canonical: vector does not match skeleton");
    for (const auto& members : s.vertexClassMembers) {
        bool zero = false;
        for (auto [tet, vtx] : members)
            if (sgn(std.entries[std_tri_pos(tet, vtx)]) == 0) {
                zero = true;
                break;
            }
        if (!zero) return false;
    }
    return true;
}

NormalVector partial_canonical_part(const NormalVector& w, int vertexClass, const Skeleton& s) {
    if (w.space != Coords::Standard || w.tets != s.tets)
        throw std::invalid_argument("partial_canonical_part: vector does not match skeleton");
    if (vertexClass < 0 || vertexClass >= s.vertexClassCount)
        throw std::invalid_argument("partial_canonical_part: class index out of range");
    const auto& members = s.vertexClassMembers[vertexClass];
    if (members.empty()) return w;
    Int lambda = w.entries[std_tri_pos(members[0].first, members[0].second)];
    for (auto [tet, vtx] : members) lambda = std::min(lambda, w.entries[std_tri_pos(tet, vtx)]);
    NormalVector r = w;
    for (auto [tet, vtx] : members) r.entries[std_tri_pos(tet, vtx)] -= lambda;
    return r;
}

NormalVector canonical_part(const NormalVector& w, const Skeleton& s) {
    NormalVector r = w;
    for (int cls = 0; cls < s.vertexClassCount; ++cls) r = partial_canonical_part(r, cls, s);
    return r;
}

NormalVector truncate(const NormalVector& w, int firstCut, const Skeleton& s) {
    if (w.space != Coords::Standard || w.tets != s.tets)
        throw std::invalid_argument("truncate: vector does not match skeleton");
    if (firstCut < 0 || firstCut > s.vertexClassCount)
        throw std::invalid_argument("truncate: cut index out of range");
    NormalVector r = w;
    for (int cls = firstCut; cls < s.vertexClassCount; ++cls)
        for (auto [tet, vtx] : s.vertexClassMembers[cls]) r.entries[std_tri_pos(tet, vtx)] = 0;
    return r;
}

NormalVector canonical_extension(const NormalVector& w, const MatchingSystem& mstd,
                                 const Skeleton& s, const std::vector<int>* seeds) {
    if (w.space != Coords::Quad || w.tets != s.tets)
        throw std::invalid_argument("canonical_extension: expected quadrilateral coordinates");
    if (mstd.space != Coords::Standard || mstd.tets != s.tets)
        throw std::invalid_argument("canonical_extension: expected a standard matching system");
    for (const Int& e : w.entries)
        if (sgn(e) < 0)
            throw std::invalid_argument("canonical_extension: input has a negative entry");
    if (!satisfies_quad_constraints(w))
        throw std::invalid_argument(
            "canonical_extension: input violates the quadrilateral constraints");

    const int n = s.tets;
    NormalVector x(Coords::Standard, n);
    for (int t = 0; t < n; ++t)
        for (int k = 0; k < 3; ++k) x.entries[std_quad_pos(t, k)] = w.entries[quad_pos(t, k)];

    // Per vertex class: seed one triangle entry at zero and propagate the
    // matching equations outward. The class members are connected through
    // glued faces, so the search reaches every member, and any equation the
    // assignment could violate is checked afterwards.
    std::vector<bool> assigned(4 * n, false);
    std::vector<int> stack;
    for (int cls = 0; cls < s.vertexClassCount; ++cls) {
        const auto& members = s.vertexClassMembers[cls];
        int seedIdx = 0;
        if (seeds) {
            seedIdx = (*seeds)[cls];
            if (seedIdx < 0 || seedIdx >= static_cast<int>(members.size()))
                throw std::invalid_argument("canonical_extension: seed index out of range");
        }
        auto [st, sv] = members[seedIdx];
        x.entries[std_tri_pos(st, sv)] = 0;
        assigned[4 * st + sv] = true;
        stack.clear();
        stack.push_back(4 * st + sv);
        while (!stack.empty()) {
            int slot = stack.back();
            stack.pop_back();
            const int tri = std_tri_pos(slot / 4, slot % 4);
            for (const TriangleAdjacency& adj : mstd.triAdj[slot]) {
                if (adj.viaFace < 0) continue;
                const int nbrSlot = (adj.nbrTri / 7) * 4 + (adj.nbrTri % 7);
                if (assigned[nbrSlot]) continue;
                x.entries[adj.nbrTri] =
                    x.entries[tri] + x.entries[adj.ownQuad] - x.entries[adj.nbrQuad];
                assigned[nbrSlot] = true;
                stack.push_back(nbrSlot);
            }
        }

        Int lambda = x.entries[std_tri_pos(members[0].first, members[0].second)];
        for (auto [tet, vtx] : members) lambda = std::min(lambda, x.entries[std_tri_pos(tet, vtx)]);
        for (auto [tet, vtx] : members) x.entries[std_tri_pos(tet, vtx)] -= lambda;
    }

    for (std::size_t r = 0; r < mstd.rows.size(); ++r)
        if (sgn(row_dot(mstd.rows[r], x.entries)) != 0)
            throw std::invalid_argument(
                "canonical_extension: input fails matching equation " + std::to_string(r) +
                "; no admissible extension exists");
    return x;
}

}  // namespace nsurf
