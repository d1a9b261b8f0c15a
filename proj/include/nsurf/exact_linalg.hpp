#pragma once

#include <vector>

#include "nsurf/vec.hpp"

namespace nsurf {

using IntMatrix = std::vector<std::vector<Int>>;

// Fraction-free (Bareiss) reduction to row echelon form, in place.
// Returns the pivot columns in order. Exact; no rounding anywhere.
std::vector<int> echelon_reduce(IntMatrix& a);

int exact_rank(IntMatrix a);

// Integer basis of the kernel of a, one primitive vector per free column.
// `cols` covers matrices with empty rows. Kernel dimension is the size of the
// result.
IntMatrix kernel_basis(IntMatrix a, int cols);

}  // namespace nsurf
