#include "nsurf/solution_set.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "nsurf/triangulation.hpp"

namespace nsurf {

void canonicalize(SolutionSet& s) {
    std::sort(s.rays.begin(), s.rays.end(),
              [](const NormalVector& a, const NormalVector& b) { return lex_less(a, b); });
    s.rays.erase(std::unique(s.rays.begin(), s.rays.end()), s.rays.end());
}

SolutionSet make_solution_set(Coords space, int tets, std::vector<NormalVector> rays) {
    SolutionSet s{space, tets, std::move(rays)};
    canonicalize(s);
    return s;
}

std::string write_solution_set(const SolutionSet& s) {
    std::ostringstream out;
    out << "coords: " << (s.space == Coords::Standard ? "std" : "quad") << "\n";
    out << "tets: " << s.tets << "\n";
    for (const NormalVector& v : s.rays) out << to_string(v) << "\n";
    return out.str();
}

SolutionSet parse_solution_set(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineNo = 0;
    int headerSeen = 0;
    SolutionSet s;

    while (std::getline(in, raw)) {
        ++lineNo;
        if (auto cut = raw.find('%'); cut != std::string::npos) raw.resize(cut);
        std::istringstream line(raw);
        std::string tok;
        if (!(line >> tok)) continue;

        if (headerSeen == 0) {
            if (tok != "coords:") throw ParseError("expected 'coords: std|quad' header", lineNo);
            std::string val;
            if (!(line >> val) || (val != "std" && val != "quad"))
                throw ParseError("coordinate system must be 'std' or 'quad'", lineNo);
            s.space = val == "std" ? Coords::Standard : Coords::Quad;
            headerSeen = 1;
            continue;
        }
        if (headerSeen == 1) {
            if (tok != "tets:") throw ParseError("expected 'tets: N' header", lineNo);
            long n = -1;
            if (!(line >> n) || n < 0 || n > 1000000)
                throw ParseError("bad tetrahedron count", lineNo);
            s.tets = static_cast<int>(n);
            headerSeen = 2;
            continue;
        }

        NormalVector v(s.space, s.tets);
        if (v.dim() == 0) throw ParseError("unexpected content in empty solution set", lineNo);
        for (int i = 0; i < v.dim(); ++i) {
            if (i > 0 && !(line >> tok)) throw ParseError("ray has too few entries", lineNo);
            const std::string& digits = tok;
            bool ok = !digits.empty();
            for (std::size_t j = 0; j < digits.size(); ++j) {
                if (j == 0 && digits[j] == '-' && digits.size() > 1) continue;
                if (!std::isdigit(static_cast<unsigned char>(digits[j]))) ok = false;
            }
            if (!ok) throw ParseError("bad integer '" + digits + "'", lineNo);
            v.entries[i] = Int(digits);
        }
        if (line >> tok) throw ParseError("ray has too many entries", lineNo);
        s.rays.push_back(std::move(v));
    }

    if (headerSeen < 2) throw ParseError("missing solution-set header", lineNo == 0 ? 1 : lineNo);
    return s;
}

}  // namespace nsurf
