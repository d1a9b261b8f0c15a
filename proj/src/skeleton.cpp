#include "nsurf/skeleton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nsurf {

int edge_pair_index(int a, int b) {
    static constexpr int table[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

namespace {

// Plain union-find over a flat index space.
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Renumbers union-find roots in first-appearance order over the index space.
std::vector<int> number_classes(UnionFind& uf, int n, int& count) {
    std::vector<int> cls(n, -1);
    count = 0;
    std::vector<int> rootToClass(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (rootToClass[r] < 0) rootToClass[r] = count++;
        cls[i] = rootToClass[r];
    }
    return cls;
}

std::string edge_name(int tet, int a, int b) {
    return "edge {" + std::to_string(a) + "," + std::to_string(b) + "} of tetrahedron " +
           std::to_string(tet);
}

}  // namespace

Skeleton build_skeleton(const Triangulation& t) {
    const int n = t.tets;
    Skeleton s;
    s.tets = n;
    s.vertexClass.assign(n, {-1, -1, -1, -1});
    s.edgeClass.assign(n, {-1, -1, -1, -1, -1, -1});
    s.faceClass.assign(n, {-1, -1, -1, -1});

    // Vertex classes: corners identified by face gluings.
    UnionFind vuf(4 * n);
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluings[tet][f];
            if (!g) continue;
            for (int v = 0; v < 4; ++v)
                if (v != f) vuf.unite(4 * tet + v, 4 * g->to.tet + g->perm(v));
        }
    std::vector<int> vcls = number_classes(vuf, 4 * n, s.vertexClassCount);
    s.vertexClassMembers.assign(s.vertexClassCount, {});
    for (int tet = 0; tet < n; ++tet)
        for (int v = 0; v < 4; ++v) {
            s.vertexClass[tet][v] = vcls[4 * tet + v];
            s.vertexClassMembers[vcls[4 * tet + v]].push_back({tet, v});
        }

    // Face classes and boundary faces.
    int fc = 0;
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            if (s.faceClass[tet][f] >= 0) continue;
            s.faceClass[tet][f] = fc;
            const auto& g = t.gluings[tet][f];
            if (g)
                s.faceClass[g->to.tet][g->to.face] = fc;
            else
                s.boundaryFaces.push_back({tet, f});
            ++fc;
        }
    s.faceClassCount = fc;

    // Edge classes with ordered cycles. Each (tet, edge pair) incidence lies
    // in exactly two faces of its tetrahedron, so a walk through consecutive
    // gluings visits every incidence of a class exactly once: around a closed
    // cycle for internal edges, along an open arc for boundary edges.
    int ec = 0;
    for (int tet0 = 0; tet0 < n; ++tet0)
        for (int pi0 = 0; pi0 < 6; ++pi0) {
            if (s.edgeClass[tet0][pi0] >= 0) continue;
            const int cls = ec++;
            const int a0 = kEdgePairs[pi0][0], b0 = kEdgePairs[pi0][1];
            // The two faces containing edge {a,b} are opposite the other two
            // vertices; start by exiting across the face opposite the smaller.
            int others[2];
            {
                int k = 0;
                for (int v = 0; v < 4; ++v)
                    if (v != a0 && v != b0) others[k++] = v;
            }
            EdgeEmbedding start{tet0, a0, b0, others[1], others[0]};

            auto step = [&](const EdgeEmbedding& e) -> std::optional<EdgeEmbedding> {
                const auto& g = t.gluings[e.tet][e.exitFace];
                if (!g) return std::nullopt;
                const Perm4& p = g->perm;
                EdgeEmbedding nxt;
                nxt.tet = g->to.tet;
                nxt.lower = p(e.lower);
                nxt.upper = p(e.upper);
                nxt.enterFace = p(e.exitFace);
                // exit across the other face containing the edge
                nxt.exitFace = 6 - nxt.lower - nxt.upper - nxt.enterFace;
                return nxt;
            };

            std::vector<EdgeEmbedding> fwd{start};
            bool closedCycle = false;
            for (;;) {
                auto nxt = step(fwd.back());
                if (!nxt) break;
                if (nxt->tet == tet0 && edge_pair_index(std::min(nxt->lower, nxt->upper),
                                                        std::max(nxt->lower, nxt->upper)) == pi0 &&
                    nxt->enterFace == start.enterFace) {
                    if (nxt->lower != start.lower)
                        throw InvalidEdgeError(edge_name(tet0, a0, b0) +
                                               " is identified with itself in reverse");
                    closedCycle = true;
                    break;
                }
                fwd.push_back(*nxt);
            }

            EdgeCycle cycle;
            if (closedCycle) {
                cycle.boundary = false;
                cycle.embeddings = std::move(fwd);
            } else {
                // Boundary edge: extend backwards from the start to the other
                // boundary face, then stitch the two half-walks together.
                cycle.boundary = true;
                std::vector<EdgeEmbedding> bwd;
                EdgeEmbedding rev{start.tet, start.lower, start.upper, start.exitFace,
                                  start.enterFace};
                for (;;) {
                    auto nxt = step(rev);
                    if (!nxt) break;
                    bwd.push_back(*nxt);
                    rev = *nxt;
                }
                // Walks in the reverse direction keep the same endpoint
                // labels but swap enter/exit; flip them back.
                cycle.embeddings.reserve(bwd.size() + fwd.size());
                for (auto it = bwd.rbegin(); it != bwd.rend(); ++it)
                    cycle.embeddings.push_back(
                        {it->tet, it->lower, it->upper, it->exitFace, it->enterFace});
                cycle.embeddings.insert(cycle.embeddings.end(), fwd.begin(), fwd.end());
            }

            for (const auto& e : cycle.embeddings) {
                int pi = edge_pair_index(std::min(e.lower, e.upper), std::max(e.lower, e.upper));
                int& slot = s.edgeClass[e.tet][pi];
                if (slot >= 0 && slot != cls)
                    throw InvalidEdgeError(edge_name(e.tet, e.lower, e.upper) +
                                           ": inconsistent edge identification");
                slot = cls;
            }
            s.edgeCycles.push_back(std::move(cycle));
        }
    s.edgeClassCount = ec;
    return s;
}

ValidationReport validate_compact(const Triangulation& t, const Skeleton& s) {
    const int n = t.tets;
    ValidationReport rep;
    rep.perVertex.resize(s.vertexClassCount);

    // The link of a vertex class is assembled from one corner triangle per
    // (tet, vertex) member. Count its faces, edges and vertices with
    // union-find over corner sides and corner-of-corner triples.
    //
    // Side (tet, v, f): the edge of corner triangle (tet,v) lying in face f.
    // Identified with (to, p(v), p(f)) when face (tet,f) is glued via p;
    // unglued sides are boundary edges of the link.
    //
    // Corner-of-corner (tet, v, w): the vertex of corner triangle (tet,v)
    // on tetrahedron edge {v,w}; it lies in the two faces containing {v,w}.
    auto sideIdx = [&](int tet, int v, int f) { return (4 * tet + v) * 4 + f; };
    auto cornIdx = [&](int tet, int v, int w) { return (4 * tet + v) * 4 + w; };

    UnionFind suf(16 * n), cuf(16 * n);
    std::vector<bool> sideBoundary(16 * n, false);
    for (int tet = 0; tet < n; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluings[tet][f];
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                if (!g) {
                    sideBoundary[sideIdx(tet, v, f)] = true;
                    continue;
                }
                suf.unite(sideIdx(tet, v, f), sideIdx(g->to.tet, g->perm(v), g->perm(f)));
                for (int w = 0; w < 4; ++w)
                    if (w != v && w != f)
                        cuf.unite(cornIdx(tet, v, w), cornIdx(g->to.tet, g->perm(v), g->perm(w)));
            }
        }

    // Tally V, E, F and boundary per vertex class.
    std::vector<int> faces(s.vertexClassCount, 0);
    std::vector<std::map<int, bool>> edgeReps(s.vertexClassCount);   // root -> any boundary
    std::vector<std::map<int, bool>> vertReps(s.vertexClassCount);   // root -> seen
    for (int tet = 0; tet < n; ++tet)
        for (int v = 0; v < 4; ++v) {
            int cls = s.vertexClass[tet][v];
            ++faces[cls];
            for (int f = 0; f < 4; ++f) {
                if (f == v) continue;
                int root = suf.find(sideIdx(tet, v, f));
                auto [it, inserted] = edgeReps[cls].try_emplace(root, false);
                it->second = it->second || sideBoundary[sideIdx(tet, v, f)];
                vertReps[cls].try_emplace(cuf.find(cornIdx(tet, v, f)), true);
            }
        }

    rep.isCompact = true;
    for (int cls = 0; cls < s.vertexClassCount; ++cls) {
        int V = static_cast<int>(vertReps[cls].size());
        int E = static_cast<int>(edgeReps[cls].size());
        int F = faces[cls];
        bool bdry = std::any_of(edgeReps[cls].begin(), edgeReps[cls].end(),
                                [](const auto& kv) { return kv.second; });
        rep.perVertex[cls] = {V - E + F, bdry};
        int want = bdry ? 1 : 2;
        if (V - E + F != want) {
            rep.isCompact = false;
            rep.failures.push_back(
                "vertex class " + std::to_string(cls) + ": " + (bdry ? "bounded" : "closed") +
                " link has Euler characteristic " + std::to_string(V - E + F) + ", expected " +
                std::to_string(want));
        }
    }
    return rep;
}

}  // namespace nsurf
