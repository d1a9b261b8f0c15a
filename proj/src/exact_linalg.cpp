#include "nsurf/exact_linalg.hpp"

#include <algorithm>

namespace nsurf {

std::vector<int> echelon_reduce(IntMatrix& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());

    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(a[i][c]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        // Bareiss step: a[i][j] <- (a[r][c]*a[i][j] - a[i][c]*a[r][j]) / prev,
        // with the division exact.
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int exact_rank(IntMatrix a) { return static_cast<int>(echelon_reduce(a).size()); }

IntMatrix kernel_basis(IntMatrix a, int cols) {
    std::vector<int> pivots = echelon_reduce(a);
    std::vector<bool> isPivot(cols, false);
    for (int c : pivots) isPivot[c] = true;

    IntMatrix basis;
    for (int freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        std::vector<Int> x(cols, 0);
        x[freeCol] = 1;
        // Back-substitute pivot rows bottom-up, rescaling the whole vector
        // whenever a division would be inexact.
        for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
            const int pc = pivots[r];
            Int num = 0;
            for (int j = pc + 1; j < cols; ++j)
                if (sgn(x[j]) != 0 && sgn(a[r][j]) != 0) num += a[r][j] * x[j];
            if (sgn(num) == 0) {
                x[pc] = 0;
                continue;
            }
            num = -num;
            Int g;
            mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), a[r][pc].get_mpz_t());
            Int scale;
            mpz_divexact(scale.get_mpz_t(), a[r][pc].get_mpz_t(), g.get_mpz_t());
            if (sgn(scale) < 0) scale = -scale;
            if (scale != 1)
                for (Int& e : x)
                    if (sgn(e) != 0) e *= scale;
            Int t = num * scale;
            mpz_divexact(x[pc].get_mpz_t(), t.get_mpz_t(), a[r][pc].get_mpz_t());
        }
        make_primitive(x);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace nsurf
