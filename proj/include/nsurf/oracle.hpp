#pragma once

#include "nsurf/matching.hpp"
#include "nsurf/solution_set.hpp"

namespace nsurf {

// Independent reference enumeration for small systems (dimension <= 24):
// walks every support pattern in increasing size, keeps the patterns whose
// restricted equation system has a one-dimensional solution space with
// strictly positive support entries, then filters to minimal supports and the
// quadrilateral constraints. Exponential; for cross-checking the double
// description path only.
std::vector<std::vector<Int>> brute_force_rays_raw(
    const std::vector<SparseRow>& rows, int dim,
    const std::vector<std::array<int, 3>>* quadGroups);

SolutionSet brute_force_rays(const MatchingSystem& m);

}  // namespace nsurf
