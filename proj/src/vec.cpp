#include "nsurf/vec.hpp"

#include <sstream>
#include <stdexcept>

namespace nsurf {

int quad_type_of_pair(int a, int b) {
    if (a == b || a < 0 || b < 0 || a > 3 || b > 3)
        throw std::invalid_argument("quad_type_of_pair: not a vertex pair");
    if (a == 0) return b - 1;
    if (b == 0) return a - 1;
    return (6 - a - b) - 1;  // the complementary pair is {0, 6-a-b}
}

bool NormalVector::is_zero() const {
    for (const Int& e : entries)
        if (sgn(e) != 0) return false;
    return true;
}

bool lex_less(const NormalVector& a, const NormalVector& b) {
    for (std::size_t i = 0; i < a.entries.size() && i < b.entries.size(); ++i) {
        int c = cmp(a.entries[i], b.entries[i]);
        if (c != 0) return c < 0;
    }
    return a.entries.size() < b.entries.size();
}

Int content(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& e : v) {
        if (sgn(e) == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(std::vector<Int>& v) {
    Int g = content(v);
    if (g <= 1) return;
    for (Int& e : v)
        if (sgn(e) != 0) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

NormalVector primitive(const NormalVector& v) {
    NormalVector r = v;
    make_primitive(r.entries);
    return r;
}

bool dominates(const NormalVector& x, const NormalVector& y) {
    if (x.entries.size() != y.entries.size())
        throw std::invalid_argument("dominates: dimension mismatch");
    for (std::size_t i = 0; i < x.entries.size(); ++i)
        if (sgn(x.entries[i]) == 0 && sgn(y.entries[i]) != 0) return false;
    return true;
}

bool strictly_dominates(const NormalVector& x, const NormalVector& y) {
    if (!dominates(x, y)) return false;
    for (std::size_t i = 0; i < x.entries.size(); ++i)
        if (sgn(y.entries[i]) == 0 && sgn(x.entries[i]) != 0) return true;
    return false;
}

bool satisfies_quad_constraints(const NormalVector& v) {
    for (int t = 0; t < v.tets; ++t) {
        int base = v.space == Coords::Standard ? std_quad_pos(t, 0) : quad_pos(t, 0);
        int nonzero = 0;
        for (int k = 0; k < 3; ++k)
            if (sgn(v.entries[base + k]) != 0) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

std::string to_string(const NormalVector& v) {
    std::ostringstream out;
    for (int i = 0; i < v.dim(); ++i) {
        if (i) out << ' ';
        out << v.entries[i].get_str();
    }
    return out.str();
}

}  // namespace nsurf
