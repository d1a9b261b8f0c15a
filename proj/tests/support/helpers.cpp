#include "support/helpers.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nsurf/enumerate.hpp"
#include "nsurf/exact_linalg.hpp"

namespace nsurf::testsup {

std::string data_dir() { return NSURF_DATA_DIR; }
std::string nsenum_path() { return NSENUM_PATH; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Triangulation load_triangulation(const std::string& path) {
    return parse_triangulation(read_file(path));
}

std::vector<std::string> glu_files(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".glu")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

int run_command(const std::string& cmd, std::string* out) {
    std::string full = cmd;
    std::string capture;
    if (out) {
        capture = scratch_dir() + "/cmd-stdout";
        full += " > " + capture;
    }
    int rc = std::system(full.c_str());
    if (rc == -1) throw std::runtime_error("system() failed for: " + cmd);
    if (out) *out = read_file(capture);
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -1;
}

std::string scratch_dir() {
    static const std::string dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("nsurf-tests-" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d.string();
    }();
    return dir;
}

namespace {

using Rat = mpq_class;

// Gaussian elimination over the rationals; returns one solution of A x = b
// with free variables at zero, or nothing if inconsistent.
std::optional<std::vector<Rat>> solve_rational(std::vector<std::vector<Rat>> a,
                                               std::vector<Rat> b, std::size_t cols) {
    const std::size_t rows = a.size();
    std::vector<int> pivotCol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivotCol.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t i = 0; i < pivotCol.size(); ++i) x[pivotCol[i]] = b[i] / a[i][pivotCol[i]];
    return x;
}

}  // namespace

std::optional<NormalVector> extension_oracle(const NormalVector& quad, const Skeleton& s,
                                             const MatchingSystem& mstd) {
    const int n = s.tets;
    // Unknowns: the 4n triangle entries. Quadrilateral terms move to the
    // right-hand side.
    std::vector<std::vector<Rat>> a;
    std::vector<Rat> b;
    for (const SparseRow& row : mstd.rows) {
        std::vector<Rat> arow(static_cast<std::size_t>(4) * n, Rat(0));
        Rat rhs(0);
        for (const auto& [pos, coef] : row) {
            const int tet = pos / 7, idx = pos % 7;
            if (idx < 4)
                arow[static_cast<std::size_t>(4) * tet + idx] += coef;
            else
                rhs -= Rat(coef) * Rat(quad.entries[quad_pos(tet, idx - 4)]);
        }
        a.push_back(std::move(arow));
        b.push_back(std::move(rhs));
    }

    auto sol = solve_rational(std::move(a), std::move(b), static_cast<std::size_t>(4) * n);
    if (!sol) return std::nullopt;

    // Canonical part over the rationals: shift each vertex class to minimum
    // zero. The result must be integral.
    std::vector<Rat> tri = *sol;
    for (const auto& members : s.vertexClassMembers) {
        Rat lambda = tri[static_cast<std::size_t>(4) * members[0].first + members[0].second];
        for (auto [tet, vtx] : members)
            lambda = std::min(lambda, tri[static_cast<std::size_t>(4) * tet + vtx]);
        for (auto [tet, vtx] : members) tri[static_cast<std::size_t>(4) * tet + vtx] -= lambda;
    }

    NormalVector out(Coords::Standard, n);
    for (int tet = 0; tet < n; ++tet) {
        for (int v = 0; v < 4; ++v) {
            Rat& e = tri[static_cast<std::size_t>(4) * tet + v];
            e.canonicalize();
            if (e.get_den() != 1) throw std::logic_error("extension oracle: non-integral part");
            out.entries[std_tri_pos(tet, v)] = e.get_num();
        }
        for (int k = 0; k < 3; ++k)
            out.entries[std_quad_pos(tet, k)] = quad.entries[quad_pos(tet, k)];
    }
    return out;
}

bool cone_adjacent_rank(const std::vector<SparseRow>& rows, int dim, const std::vector<Int>& u,
                        const std::vector<Int>& w) {
    IntMatrix m;
    for (const SparseRow& r : rows) {
        std::vector<Int> dense(dim, 0);
        for (const auto& [p, c] : r) dense[p] = c;
        m.push_back(std::move(dense));
    }
    for (int i = 0; i < dim; ++i) {
        if (sgn(u[i]) == 0 && sgn(w[i]) == 0) {
            std::vector<Int> unit(dim, 0);
            unit[i] = 1;
            m.push_back(std::move(unit));
        }
    }
    return dim - exact_rank(std::move(m)) == 2;
}

std::vector<NormalVector> admissible_quad_samples(const Triangulation& t, const Skeleton& s,
                                                  std::size_t maxCount) {
    const MatchingSystem mq = quad_matching_system(t, s);
    SolutionSet qs = enumerate_solution_set(mq);
    std::vector<NormalVector> out = qs.rays;
    for (std::size_t i = 0; i < qs.rays.size() && out.size() < maxCount; ++i)
        for (std::size_t j = i + 1; j < qs.rays.size() && out.size() < maxCount; ++j) {
            NormalVector sum(Coords::Quad, t.tets);
            for (int c = 0; c < sum.dim(); ++c)
                sum.entries[c] = 2 * qs.rays[i].entries[c] + 3 * qs.rays[j].entries[c];
            if (satisfies_quad_constraints(sum)) out.push_back(std::move(sum));
        }
    return out;
}

}  // namespace nsurf::testsup
