#pragma once

#include "latsize/polygon.hpp"

#include <optional>
#include <string>
#include <utility>

namespace latsize {

// d * conv{(0,0),(1,0),(0,1)}.
LatticePolygon standard_triangle(Int d);
// d * conv{(-1,-1),(1,0),(0,1)}.
LatticePolygon upsilon(Int d);
// [0,a] x [0,b].
LatticePolygon rectangle(Int a, Int b);
// conv{(0,0),(a,0),(b,1),(0,1)}.
LatticePolygon lawrence_prism(Int a, Int b);

struct SpecialShape {
    enum class Kind { None, StandardTriangle, Upsilon, RectangleUnimodular, LawrencePrism };

    Kind kind = Kind::None;
    Int first = 0;  // d, or a
    Int second = 0; // b for rectangles and prisms

    static SpecialShape none() { return {}; }
    static SpecialShape standard_triangle(Int d) { return {Kind::StandardTriangle, d, 0}; }
    static SpecialShape upsilon(Int d) { return {Kind::Upsilon, d, 0}; }
    static SpecialShape rectangle(Int a, Int b) { return {Kind::RectangleUnimodular, a, b}; }
    static SpecialShape lawrence_prism(Int a, Int b) { return {Kind::LawrencePrism, a, b}; }

    friend bool operator==(const SpecialShape&, const SpecialShape&) = default;
};

// "StandardTriangle(4)", "LawrencePrism(4,2)", "None", ...
std::string to_string(const SpecialShape& shape);

std::optional<Int> as_standard_triangle(const LatticePolygon& polygon);
std::optional<Int> as_upsilon(const LatticePolygon& polygon);
// (a, b) with a <= b.
std::optional<std::pair<Int, Int>> as_rectangle(const LatticePolygon& polygon);

// First match among dSigma, dUpsilon, unimodular rectangles, Lawrence prisms.
// Throws PreconditionError on degenerate input.
SpecialShape recognize_special(const LatticePolygon& polygon);

} // namespace latsize
