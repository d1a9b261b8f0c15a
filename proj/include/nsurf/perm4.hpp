#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace nsurf {

// Permutation of {0,1,2,3}, used for affine face gluings between tetrahedra.
struct Perm4 {
    std::array<std::uint8_t, 4> img{0, 1, 2, 3};

    int operator()(int v) const { return img[v]; }

    static Perm4 identity() { return Perm4{}; }

    Perm4 inverse() const {
        Perm4 r;
        for (int v = 0; v < 4; ++v) r.img[img[v]] = static_cast<std::uint8_t>(v);
        return r;
    }

    // Composition: (a.after(b))(v) == a(b(v)).
    Perm4 after(const Perm4& b) const {
        Perm4 r;
        for (int v = 0; v < 4; ++v) r.img[v] = img[b.img[v]];
        return r;
    }

    bool is_valid() const {
        int seen = 0;
        for (int v = 0; v < 4; ++v) {
            if (img[v] > 3) return false;
            seen |= 1 << img[v];
        }
        return seen == 0xF;
    }

    int sign() const {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img[i] > img[j]) ++inv;
        return (inv % 2 == 0) ? +1 : -1;
    }

    bool operator==(const Perm4&) const = default;
    auto operator<=>(const Perm4&) const = default;

    std::string str() const {
        std::string s;
        for (int v = 0; v < 4; ++v) {
            if (v) s += ' ';
            s += static_cast<char>('0' + img[v]);
        }
        return s;
    }
};

}  // namespace nsurf
