#pragma once

#include <cstdint>
#include <string>

#include "nsurf/enumerate.hpp"

namespace nsurf {

// Projects a standard solution set to quadrilateral coordinates and keeps
// exactly the projections that are vertices of the quadrilateral cone: drop
// zero projections (vertex links), then drop any projection that dominates
// another one. Quadratic in the set size, linear in the dimension.
SolutionSet std_to_quad(const SolutionSet& stdSet, const Triangulation& t);

// Two vectors can contribute to a common admissible surface only if in every
// tetrahedron at least two of the three quadrilateral coordinates vanish in
// both of them simultaneously.
bool compatible_pair(const NormalVector& u, const NormalVector& w);

// True when no z in `list` other than u and w (by value) vanishes at every
// position of `positions` where both u and w vanish. Within the conversion
// this certifies that u and w span a two-dimensional face of the current
// cone.
bool adjacency_witness_test(const NormalVector& u, const NormalVector& w,
                            const std::vector<NormalVector>& list,
                            const std::vector<int>& positions);

struct TraceRow {
    std::string stage;  // extend | seed | dd | link
    int vertex = -1;    // vertex class being processed
    int position = -1;  // triangle position just processed (dd rows)
    std::size_t listSize = 0;
    std::size_t peak = 0;
    long long micros = 0;  // elapsed since conversion start
};

struct ConversionTrace {
    std::vector<TraceRow> rows;
    std::vector<std::size_t> perVertexListSizes;  // |L| after each vertex stage
    std::size_t maxIntermediate = 0;
    std::size_t finalSize = 0;

    double max_list_ratio() const {
        return finalSize == 0 ? 0.0
                              : static_cast<double>(maxIntermediate) /
                                    static_cast<double>(finalSize);
    }
};

std::string write_trace_csv(const ConversionTrace& trace);

// Loop-invariant verification inside quad_to_std: enabled by the
// NS_DEBUG_INVARIANTS=1 environment variable or explicitly from code. Costs
// a pass over the working list per step when on, a single flag test when off.
bool debug_invariants_enabled();
void set_debug_invariants(bool on);

struct ConvertOptions {
    RunControl run{};
    ConversionTrace* trace = nullptr;

    // Test hooks: the output is independent of both orders.
    const std::vector<int>* vertexOrder = nullptr;  // permutation of vertex classes
    std::uint64_t shufflePositionsSeed = 0;         // nonzero: shuffle each class's positions
};

// Lifts a quadrilateral solution set to the standard solution set. Extends
// every input ray canonically, then restores the triangle coordinates one
// vertex class at a time: subtract the canonical part, adjoin the negative
// vertex link, re-impose non-negativity position by position with double
// description steps filtered through compatible_pair and
// adjacency_witness_test over the processed positions, and finally adjoin the
// vertex link itself. Throws std::invalid_argument if an input ray is not
// admissible for the quadrilateral matching system.
SolutionSet quad_to_std(const SolutionSet& quadSet, const Triangulation& t, const Skeleton& s,
                        const MatchingSystem& mstd, const ConvertOptions& opt = {});

// Quadrilateral double description enumeration followed by quad_to_std.
SolutionSet enumerate_std_via_quad(const Triangulation& t, const Skeleton& s,
                                   const ConvertOptions& opt = {},
                                   EnumStats* quadStats = nullptr);

}  // namespace nsurf
