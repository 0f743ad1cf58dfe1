#pragma once

#include "latsize/polygon.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace latsize {

// The bodies a polygon is fitted into: d*Sigma, d*Square, or [0,a] x [0,b].
struct TargetShape {
    enum class Kind { Sigma, Square, Box };

    Kind kind = Kind::Sigma;
    Int a = 0; // Box only, 0 <= a <= b
    Int b = 0;

    static TargetShape sigma() { return {Kind::Sigma, 0, 0}; }
    static TargetShape square() { return {Kind::Square, 0, 0}; }
    static TargetShape box(Int a, Int b);

    friend bool operator==(const TargetShape&, const TargetShape&) = default;
};

std::string to_string(const TargetShape& shape);

// Lattice size of the empty polygon: -2 for Sigma, -1 for Square.
Int empty_size(TargetShape::Kind kind);

enum class SizeRule {
    Convention, // point or segment skin: value fixed by definition
    GenericStep,
    LawrencePrism,
    TwoSigma,
    SmallTriangleTable,
    RectangleAB,
    ParallelEdge,
    DegenerateBaseSearch,
};

std::string to_string(SizeRule rule);

struct SizeStep {
    LatticePolygon skin;
    SizeRule rule = SizeRule::GenericStep;
    Int contribution = 0; // value(skin) - value(next skin), the innermost against the empty convention
    // Rule parameters: (r, s) edge and face lengths for ParallelEdge, (a, b) for
    // LawrencePrism and RectangleAB; zero otherwise.
    Int r = 0;
    Int s = 0;
};

struct SizeCertificate {
    TargetShape shape;
    Int value = 0;
    AffineUnimodularMap witness; // maps the polygon into value * shape
    std::vector<SizeStep> trace; // outermost skin first
};

struct BoxCertificate {
    Int a = 0; // lattice width
    Int b = 0; // lattice size with respect to the square
    AffineUnimodularMap witness; // maps the polygon into [0,a] x [0,b]
};

// An edge of the outer polygon and the face of the inner polygon lying on its
// inward unit shift. s is 0 when that face is a vertex.
struct ParallelEdgePair {
    Int r = 0;
    Int s = 0;
    std::pair<LatticePoint, LatticePoint> outer_edge;
    std::pair<LatticePoint, LatticePoint> inner_face;
};

// Requires inner == interior_hull(outer), non-empty. Returns the pair with the
// largest r - s when it reaches the threshold.
std::optional<ParallelEdgePair> parallel_edge_exception(const LatticePolygon& outer, const LatticePolygon& inner,
                                                        Int threshold);

SizeCertificate lattice_size_sigma(const LatticePolygon& polygon);
SizeCertificate lattice_size_square(const LatticePolygon& polygon);

BoxCertificate minimal_box(const LatticePolygon& polygon);

// Unimodular map sending the polygon into d*Sigma or d*Square (Box uses its
// own a, b and ignores d), or nothing if none exists. The search order is
// lexicographic on (|u1|^2, u1, |u2|^2, u2) over the rows of the map; within
// a norm, Sigma rows run from the largest vector down and box rows, which are
// normalized, from the smallest up.
std::optional<AffineUnimodularMap> fit_into(const LatticePolygon& polygon, const TargetShape& shape, Int d = 0);

// Exact check that map(polygon) lies in d*shape (or the box).
bool image_contained(const LatticePolygon& polygon, const AffineUnimodularMap& map, const TargetShape& shape,
                     Int d = 0);

} // namespace latsize
