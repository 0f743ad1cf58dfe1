#pragma once

#include "latsize/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latsize {

// max <u,p> - min <u,p> over the polygon. Throws on empty polygon or zero u.
Int width_along(const LatticePolygon& polygon, LatticePoint u);

// Minimal Euclidean width of a two-dimensional polygon, as the exact quotient
// w^2 = cross^2 / edge_norm2 attained at some edge (rotating calipers).
struct EuclideanWidth {
    Wide cross = 0;
    Wide edge_norm2 = 1;
};
EuclideanWidth minimal_euclidean_width(const LatticePolygon& polygon);

// Largest N such that every primitive u with width_along(u) <= max_width has
// |u|^2 <= N. Two-dimensional polygons only.
Int direction_norm_bound(const LatticePolygon& polygon, Int max_width);

// Primitive vectors with |u|^2 <= norm_bound, normalized (a > 0, or a == 0
// and b > 0), sorted by (|u|^2, a, b).
std::vector<LatticePoint> primitive_directions(Int norm_bound);
// Same, but with both signs, sorted by |u|^2 and then lexicographically
// descending, so (1,0) precedes (0,1) precedes (0,-1).
std::vector<LatticePoint> signed_primitive_directions(Int norm_bound);

struct WidthResult {
    Int width = -1;
    std::vector<LatticePoint> directions; // sorted by (|u|^2, a, b)
};

// Exact lattice width by direction enumeration inside the disc allowed by
// the Euclidean width. Empty gives -1. A point reports (0,1) and (1,0).
WidthResult lattice_width(const LatticePolygon& polygon);

enum class WidthRule { Convention, StandardTriangleException, BaseTable, PeelStep };
std::string to_string(WidthRule rule);

struct WidthStep {
    LatticePolygon skin;
    WidthRule rule;
    Int contribution;
};

struct WidthRecursion {
    Int width = -1;
    std::vector<WidthStep> trace; // outermost skin first
};

// Lattice width by peeling onion skins: lw = lw(interior) + 2 except for
// multiples of the standard triangle and degenerate interiors.
WidthRecursion lattice_width_recursive(const LatticePolygon& polygon);

// Normal form of a polygon of lattice width 1: a map onto
// conv{(0,0),(a,0),(b,1),(0,1)} with a >= b >= 0.
struct LawrenceForm {
    Int a = 0;
    Int b = 0;
    AffineUnimodularMap map;
};
std::optional<LawrenceForm> lawrence_form(const LatticePolygon& polygon);

} // namespace latsize
