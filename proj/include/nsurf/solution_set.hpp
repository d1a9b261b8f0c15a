#pragma once

#include <string>
#include <vector>

#include "nsurf/vec.hpp"

namespace nsurf {

// A finite set of primitive rays in one coordinate system, kept sorted
// lexicographically so equal sets serialize to identical bytes.
struct SolutionSet {
    Coords space = Coords::Standard;
    int tets = 0;
    std::vector<NormalVector> rays;

    bool operator==(const SolutionSet&) const = default;
};

// Sorts and removes duplicates.
void canonicalize(SolutionSet& s);

SolutionSet make_solution_set(Coords space, int tets, std::vector<NormalVector> rays);

// Text format:
//
//   coords: std|quad
//   tets: N
//   <one ray per line, space-separated integers>
//
// Blank lines and % comments are ignored on input; the writer emits the
// canonical sorted form with no comments.
std::string write_solution_set(const SolutionSet& s);
SolutionSet parse_solution_set(const std::string& text);

}  // namespace nsurf
