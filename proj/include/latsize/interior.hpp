#pragma once

#include "latsize/polygon.hpp"

#include <vector>

namespace latsize {

// Convex hull of the lattice points strictly inside; Empty for degenerate input.
LatticePolygon interior_hull(const LatticePolygon& polygon);

// Intersection of the half-planes obtained by shifting every supporting line
// of a two-dimensional polygon one integral unit outward. Throws
// NotAnInteriorPolygon when the result is not a lattice polygon.
LatticePolygon move_out(const LatticePolygon& polygon);

// Iterated interior hulls, starting with the polygon itself and ending with
// the last non-empty one.
struct OnionTrace {
    std::vector<LatticePolygon> skins;
};

OnionTrace onion_skins(const LatticePolygon& polygon);

} // namespace latsize
