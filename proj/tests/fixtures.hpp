#pragma once

#include "latsize/polygon.hpp"

namespace fixtures {

inline latsize::LatticePolygon heptagon() {
    return latsize::hull({{8, 0}, {6, 1}, {2, 4}, {0, 6}, {0, 8}, {3, 7}, {5, 6}});
}

// Triangle conv{(0,0),(2g+1,0),(0,2)} of a hyperelliptic curve of genus g.
inline latsize::LatticePolygon weierstrass(latsize::Int g) { return latsize::hull({{0, 0}, {2 * g + 1, 0}, {0, 2}}); }

} // namespace fixtures
