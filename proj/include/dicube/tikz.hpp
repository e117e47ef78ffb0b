#pragma once

// Standalone TikZ rendering of 2-dimensional complexes: one fill per square,
// one draw per edge, one dot per vertex, at lattice coordinates.

#include <sstream>
#include <string>

#include "dicube/cube.hpp"

namespace dicube {

inline std::string export_tikz(const CubicalComplex& K) {
    if (K.dim() != 2)
        throw UnsupportedDimension("TikZ export supports 2-dimensional complexes only, got " +
                                   std::to_string(K.dim()));
    std::ostringstream os;
    os << "\\documentclass[tikz]{standalone}\n"
       << "\\begin{document}\n"
       << "\\begin{tikzpicture}\n";
    for (const Cube& c : K.sorted_cubes()) {
        if (c.dim() != 2) continue;
        os << "  \\fill[lightgray] (" << c.base[0] << ',' << c.base[1] << ") rectangle ("
           << c.base[0] + 1 << ',' << c.base[1] + 1 << ");\n";
    }
    for (const Cube& c : K.sorted_cubes()) {
        if (c.dim() != 1) continue;
        const Vertex t = c.top();
        os << "  \\draw (" << c.base[0] << ',' << c.base[1] << ") -- (" << t[0] << ',' << t[1]
           << ");\n";
    }
    for (const Cube& c : K.sorted_cubes()) {
        if (c.dim() != 0) continue;
        os << "  \\fill (" << c.base[0] << ',' << c.base[1] << ") circle [radius=0.06];\n";
    }
    os << "\\end{tikzpicture}\n"
       << "\\end{document}\n";
    return os.str();
}

} // namespace dicube
