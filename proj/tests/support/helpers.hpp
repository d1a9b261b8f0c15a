#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsurf/enumerate.hpp"
#include "nsurf/matching.hpp"

// File, process and reference-computation helpers for the tests.
namespace nsurf::testsup {

std::string data_dir();
std::string nsenum_path();

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Triangulation load_triangulation(const std::string& path);

// All .glu files in a directory, sorted by name.
std::vector<std::string> glu_files(const std::string& dir);

// Runs a command line, returns its exit code; stdout is captured into `out`
// when given.
int run_command(const std::string& cmd, std::string* out = nullptr);

// Fresh private directory for CLI artifacts; created on first use.
std::string scratch_dir();

// Reference computation of the canonical extension: solves the standard
// matching equations for the triangle entries with the quadrilateral part
// fixed, by rational Gaussian elimination, then takes the canonical part.
// Entirely independent of the library's propagation code. Empty when the
// system is inconsistent.
std::optional<NormalVector> extension_oracle(const NormalVector& quad, const Skeleton& s,
                                             const MatchingSystem& mstd);

// Rank-based adjacency in the cone {rows . x = 0, x >= 0}: u and w span a
// two-dimensional minimal face exactly when the equations plus the unit rows
// of their common zero positions leave a rank-2 kernel.
bool cone_adjacent_rank(const std::vector<SparseRow>& rows, int dim,
                        const std::vector<Int>& u, const std::vector<Int>& w);

// Admissible quadrilateral test vectors for a triangulation: the rays of the
// quadrilateral solution set plus pairwise sums that stay admissible.
std::vector<NormalVector> admissible_quad_samples(const Triangulation& t, const Skeleton& s,
                                                  std::size_t maxCount = 32);

}  // namespace nsurf::testsup
