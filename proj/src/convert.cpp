#include "nsurf/convert.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>

namespace nsurf {

SolutionSet std_to_quad(const SolutionSet& stdSet, const Triangulation& t) {
    if (stdSet.space != Coords::Standard || stdSet.tets != t.tets)
        throw std::invalid_argument("std_to_quad: expected a standard solution set for t");

    std::vector<NormalVector> proj;
    for (const NormalVector& v : stdSet.rays) {
        NormalVector q = project(v);
        if (!q.is_zero()) proj.push_back(std::move(q));
    }
    // Distinct projections only: the domination filter below must treat the
    // projections as a set, or two equal images would knock each other out.
    std::sort(proj.begin(), proj.end(), lex_less);
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    std::vector<NormalVector> kept;
    for (std::size_t i = 0; i < proj.size(); ++i) {
        bool dominating = false;
        for (std::size_t j = 0; j < proj.size() && !dominating; ++j)
            dominating = i != j && dominates(proj[i], proj[j]);
        if (!dominating) kept.push_back(proj[i]);
    }
    return make_solution_set(Coords::Quad, t.tets, std::move(kept));
}

bool compatible_pair(const NormalVector& u, const NormalVector& w) {
    if (u.space != w.space || u.tets != w.tets)
        throw std::invalid_argument("compatible_pair: shape mismatch");
    for (int t = 0; t < u.tets; ++t) {
        int base = u.space == Coords::Standard ? std_quad_pos(t, 0) : quad_pos(t, 0);
        int nonzero = 0;
        for (int k = 0; k < 3; ++k)
            if (sgn(u.entries[base + k]) != 0 || sgn(w.entries[base + k]) != 0) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

bool adjacency_witness_test(const NormalVector& u, const NormalVector& w,
                            const std::vector<NormalVector>& list,
                            const std::vector<int>& positions) {
    std::vector<int> common;
    for (int p : positions)
        if (sgn(u.entries[p]) == 0 && sgn(w.entries[p]) == 0) common.push_back(p);
    for (const NormalVector& z : list) {
        if (z == u || z == w) continue;
        bool vanishes = true;
        for (int p : common)
            if (sgn(z.entries[p]) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) return false;
    }
    return true;
}

std::string write_trace_csv(const ConversionTrace& trace) {
    std::ostringstream out;
    out << "stage,vertex,position,listSize,peak,micros\n";
    for (const TraceRow& r : trace.rows)
        out << r.stage << ',' << r.vertex << ',' << r.position << ',' << r.listSize << ','
            << r.peak << ',' << r.micros << "\n";
    return out.str();
}

namespace {

bool gDebugInvariants = [] {
    const char* env = std::getenv("NS_DEBUG_INVARIANTS");
    return env && std::string(env) == "1";
}();

}  // namespace

bool debug_invariants_enabled() { return gDebugInvariants; }
void set_debug_invariants(bool on) { gDebugInvariants = on; }

namespace {

// Working vector with cached zero mask and per-tetrahedron nonzero-quad bits.
struct Work {
    std::vector<Int> x;
    Mask256 zeros;
    std::vector<std::uint8_t> qmask;
};

Work make_work(std::vector<Int> x, int tets) {
    Work w;
    w.zeros = zero_mask(x);
    w.qmask.resize(tets);
    for (int t = 0; t < tets; ++t) {
        std::uint8_t m = 0;
        for (int k = 0; k < 3; ++k)
            if (sgn(x[std_quad_pos(t, k)]) != 0) m |= std::uint8_t(1) << k;
        w.qmask[t] = m;
    }
    w.x = std::move(x);
    return w;
}

bool work_lex_less(const Work& a, const Work& b) {
    for (std::size_t i = 0; i < a.x.size(); ++i) {
        int c = cmp(a.x[i], b.x[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

void sort_dedupe(std::vector<Work>& list) {
    std::sort(list.begin(), list.end(), work_lex_less);
    list.erase(std::unique(list.begin(), list.end(),
                           [](const Work& a, const Work& b) { return a.x == b.x; }),
               list.end());
}

constexpr std::uint8_t kPop3[8] = {0, 1, 1, 2, 1, 2, 2, 3};

bool compatible_work(const Work& u, const Work& w) {
    for (std::size_t t = 0; t < u.qmask.size(); ++t)
        if (kPop3[u.qmask[t] | w.qmask[t]] > 1) return false;
    return true;
}

}  // namespace

SolutionSet quad_to_std(const SolutionSet& quadSet, const Triangulation& t, const Skeleton& s,
                        const MatchingSystem& mstd, const ConvertOptions& opt) {
    const int n = t.tets;
    if (quadSet.space != Coords::Quad || quadSet.tets != n)
        throw std::invalid_argument("quad_to_std: expected a quadrilateral solution set for t");
    if (mstd.space != Coords::Standard || mstd.tets != n)
        throw std::invalid_argument("quad_to_std: expected a standard matching system for t");
    if (7 * n > kMaxDim)
        throw std::invalid_argument("quad_to_std: dimension above supported bound");

    {
        MatchingSystem mquad = quad_matching_system(t, s);
        for (const NormalVector& q : quadSet.rays)
            if (!is_admissible(q, mquad))
                throw std::invalid_argument("quad_to_std: input ray not admissible: " +
                                            to_string(q));
    }

    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    };

    ConversionTrace localTrace;
    ConversionTrace& trace = opt.trace ? *opt.trace : localTrace;
    trace = {};
    auto record = [&](const char* stage, int vertex, int position, std::size_t size) {
        trace.maxIntermediate = std::max(trace.maxIntermediate, size);
        trace.rows.push_back({stage, vertex, position, size, trace.maxIntermediate, elapsed()});
    };

    std::vector<Work> L;
    for (const NormalVector& q : quadSet.rays)
        L.push_back(make_work(canonical_extension(q, mstd, s).entries, n));
    sort_dedupe(L);
    record("extend", -1, -1, L.size());

    // Processed positions: the quadrilateral block up front, triangle
    // positions added one at a time below.
    Mask256 cmask;
    std::vector<int> cpos;
    for (int tet = 0; tet < n; ++tet)
        for (int k = 0; k < 3; ++k) {
            cmask.set(std_quad_pos(tet, k));
            cpos.push_back(std_quad_pos(tet, k));
        }

    std::vector<int> order(s.vertexClassCount);
    for (int i = 0; i < s.vertexClassCount; ++i) order[i] = i;
    if (opt.vertexOrder) {
        if (static_cast<int>(opt.vertexOrder->size()) != s.vertexClassCount)
            throw std::invalid_argument("quad_to_std: bad vertex order");
        order = *opt.vertexOrder;
    }
    std::mt19937_64 shuffleRng(opt.shufflePositionsSeed);

    // With invariants on, every working vector must satisfy the matching
    // equations and quadrilateral constraints, be non-negative on processed
    // positions, and retain a non-positive triangle entry in the class under
    // construction until its vertex link is adjoined.
    auto check_invariants = [&](const char* where, int cls, const std::vector<int>& classTris) {
        if (!debug_invariants_enabled()) return;
        for (const Work& w : L) {
            for (const SparseRow& row : mstd.rows)
                if (sgn(row_dot(row, w.x)) != 0)
                    throw std::logic_error(std::string("quad_to_std invariant (") + where +
                                           "): matching equation violated");
            for (std::size_t tet = 0; tet < w.qmask.size(); ++tet)
                if (kPop3[w.qmask[tet]] > 1)
                    throw std::logic_error(std::string("quad_to_std invariant (") + where +
                                           "): quadrilateral constraint violated");
            for (int p : cpos)
                if (sgn(w.x[p]) < 0)
                    throw std::logic_error(std::string("quad_to_std invariant (") + where +
                                           "): negative entry on processed position");
            bool hasNonPositive = false;
            for (int p : classTris)
                if (sgn(w.x[p]) <= 0) {
                    hasNonPositive = true;
                    break;
                }
            if (!hasNonPositive)
                throw std::logic_error(std::string("quad_to_std invariant (") + where +
                                       "): no non-positive entry around vertex class " +
                                       std::to_string(cls));
        }
    };

    for (int cls : order) {
        opt.run.check();

        // (a) canonical part relative to this class, re-reduced to primitive
        {
            std::vector<Work> next;
            next.reserve(L.size());
            for (Work& w : L) {
                NormalVector v(Coords::Standard, n, std::move(w.x));
                v = partial_canonical_part(v, cls, s);
                make_primitive(v.entries);
                next.push_back(make_work(std::move(v.entries), n));
            }
            L = std::move(next);
            sort_dedupe(L);
        }

        // (b) adjoin the negated vertex link
        {
            NormalVector link = vertex_link(s, cls);
            for (Int& e : link.entries) e = -e;
            L.push_back(make_work(std::move(link.entries), n));
            sort_dedupe(L);
        }
        record("seed", cls, -1, L.size());

        std::vector<int> classTris;
        for (auto [tet, vtx] : s.vertexClassMembers[cls])
            classTris.push_back(std_tri_pos(tet, vtx));
        std::sort(classTris.begin(), classTris.end());
        classTris.erase(std::unique(classTris.begin(), classTris.end()), classTris.end());
        check_invariants("seed", cls, classTris);

        // (c) restore non-negativity at each triangle position of the class
        std::vector<int> posOrder = classTris;
        if (opt.shufflePositionsSeed != 0)
            std::shuffle(posOrder.begin(), posOrder.end(), shuffleRng);

        for (int p : posOrder) {
            opt.run.check();
            Mask256 cmaskP = cmask;
            cmaskP.set(p);

            std::vector<const Work*> sPos, sNeg;
            std::vector<Work> next;
            for (Work& w : L) {
                int sg = sgn(w.x[p]);
                if (sg >= 0) next.push_back(w);
                if (sg > 0)
                    sPos.push_back(&w);
                else if (sg < 0)
                    sNeg.push_back(&w);
            }

            for (const Work* u : sPos) {
                opt.run.check();
                for (const Work* w : sNeg) {
                    if (!compatible_work(*u, *w)) continue;
                    const Mask256 common = (u->zeros & w->zeros) & cmaskP;
                    bool adjacent = true;
                    for (const Work& z : L) {
                        if (&z == u || &z == w) continue;
                        if (subset(common, z.zeros)) {
                            adjacent = false;
                            break;
                        }
                    }
                    if (!adjacent) continue;

                    std::vector<Int> y(7 * n);
                    for (int i = 0; i < 7 * n; ++i)
                        y[i] = u->x[p] * w->x[i] - w->x[p] * u->x[i];
                    make_primitive(y);
                    next.push_back(make_work(std::move(y), n));
                }
            }

            L = std::move(next);
            sort_dedupe(L);
            cmask.set(p);
            cpos.push_back(p);
            record("dd", cls, p, L.size());
            check_invariants("dd", cls, classTris);
        }

        // (d) adjoin the vertex link itself
        L.push_back(make_work(vertex_link(s, cls).entries, n));
        sort_dedupe(L);
        record("link", cls, -1, L.size());
        trace.perVertexListSizes.push_back(L.size());
    }

    std::vector<NormalVector> out;
    out.reserve(L.size());
    for (Work& w : L) out.push_back(NormalVector(Coords::Standard, n, std::move(w.x)));
    SolutionSet result = make_solution_set(Coords::Standard, n, std::move(out));
    trace.finalSize = result.rays.size();
    return result;
}

SolutionSet enumerate_std_via_quad(const Triangulation& t, const Skeleton& s,
                                   const ConvertOptions& opt, EnumStats* quadStats) {
    MatchingSystem mquad = quad_matching_system(t, s);
    MatchingSystem mstd = standard_matching_system(t, s);
    SolutionSet quads = enumerate_solution_set(mquad, opt.run, quadStats);
    return quad_to_std(quads, t, s, mstd, opt);
}

}  // namespace nsurf
