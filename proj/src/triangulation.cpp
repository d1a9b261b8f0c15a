#include "nsurf/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nsurf {

bool Triangulation::operator==(const Triangulation& o) const {
    if (tets != o.tets) return false;
    for (int t = 0; t < tets; ++t)
        for (int f = 0; f < 4; ++f) {
            const auto& a = gluings[t][f];
            const auto& b = o.gluings[t][f];
            if (a.has_value() != b.has_value()) return false;
            if (a && (a->to != b->to || a->perm != b->perm)) return false;
        }
    return true;
}

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : std::string()) +
                         ": " + msg),
      line(line),
      column(column) {}

namespace {

struct LineScanner {
    const std::string& s;
    int lineNo;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    int col() const { return static_cast<int>(pos) + 1; }

    // Reads a non-negative integer token.
    long next_int(const char* what) {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            throw ParseError(std::string("expected ") + what, lineNo, static_cast<int>(start) + 1);
        long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (s[i] - '0');
            if (v > 1000000) throw ParseError(std::string(what) + " out of range", lineNo, static_cast<int>(start) + 1);
        }
        return v;
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", lineNo, col());
        ++pos;
    }
};

}  // namespace

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    bool sawHeader = false;
    Triangulation tri;

    auto faceName = [](const FaceRef& fr) {
        return "tetrahedron " + std::to_string(fr.tet) + " face " + std::to_string(fr.face);
    };

    while (std::getline(in, raw)) {
        ++lineNo;
        if (auto cut = raw.find('%'); cut != std::string::npos) raw.resize(cut);
        LineScanner sc{raw, lineNo};
        if (sc.at_end()) continue;

        if (!sawHeader) {
            static const std::string kw = "tetrahedra";
            if (raw.compare(sc.pos, kw.size(), kw) != 0)
                throw ParseError("expected 'tetrahedra: N' header", lineNo, sc.col());
            sc.pos += kw.size();
            sc.expect(':');
            long n = sc.next_int("tetrahedron count");
            if (!sc.at_end()) throw ParseError("trailing input after header", lineNo, sc.col());
            tri.tets = static_cast<int>(n);
            tri.gluings.resize(tri.tets);
            sawHeader = true;
            continue;
        }

        static const std::string kw = "glue";
        if (raw.compare(sc.pos, kw.size(), kw) != 0)
            throw ParseError("expected 'glue' line", lineNo, sc.col());
        sc.pos += kw.size();

        auto readFace = [&](const char* what) {
            int tcol = sc.col();
            long t = sc.next_int("tetrahedron index");
            int fcol = sc.col();
            long f = sc.next_int("face index");
            if (t >= tri.tets)
                throw ParseError(std::string(what) + ": tetrahedron index out of range", lineNo, tcol);
            if (f > 3)
                throw ParseError(std::string(what) + ": face index out of range", lineNo, fcol);
            return FaceRef{static_cast<int>(t), static_cast<int>(f)};
        };

        FaceRef a = readFace("source");
        sc.expect(':');
        FaceRef b = readFace("target");
        sc.expect(':');
        Perm4 p;
        int pcol = sc.col();
        for (int v = 0; v < 4; ++v) {
            long x = sc.next_int("permutation entry");
            if (x > 3) throw ParseError("permutation entry out of range", lineNo, pcol);
            p.img[v] = static_cast<std::uint8_t>(x);
        }
        if (!sc.at_end()) throw ParseError("trailing input after gluing", lineNo, sc.col());
        if (!p.is_valid()) throw ParseError("gluing entries are not a permutation of 0 1 2 3", lineNo, pcol);
        if (p(a.face) != b.face)
            throw ParseError("permutation does not carry face " + std::to_string(a.face) +
                                 " to face " + std::to_string(b.face),
                             lineNo, pcol);
        if (a == b) throw ParseError("face glued to itself: " + faceName(a), lineNo);

        auto& fwd = tri.gluings[a.tet][a.face];
        auto& rev = tri.gluings[b.tet][b.face];
        if (fwd) {
            if (fwd->to == b && fwd->perm == p)
                throw ParseError("gluing orbit listed twice: " + faceName(a), lineNo);
            throw ParseError("face glued twice: " + faceName(a), lineNo);
        }
        if (rev) throw ParseError("face glued twice: " + faceName(b), lineNo);
        fwd = Gluing{b, p};
        rev = Gluing{a, p.inverse()};
    }

    if (!sawHeader) throw ParseError("missing 'tetrahedra: N' header", lineNo == 0 ? 1 : lineNo);
    return tri;
}

std::string serialize_triangulation(const Triangulation& t) {
    std::ostringstream out;
    out << "tetrahedra: " << t.tets << "\n";
    for (int tet = 0; tet < t.tets; ++tet)
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluings[tet][f];
            if (!g) continue;
            if (FaceRef{tet, f} > g->to) continue;  // emit each orbit from its smaller side
            out << "glue " << tet << ' ' << f << " : " << g->to.tet << ' ' << g->to.face
                << " : " << g->perm.str() << "\n";
        }
    return out.str();
}

}  // namespace nsurf
