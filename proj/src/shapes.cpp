#include "latsize/shapes.hpp"

#include "latsize/errors.hpp"
#include "latsize/width.hpp"

namespace latsize {

LatticePolygon standard_triangle(Int d) { return hull({{0, 0}, {d, 0}, {0, d}}); }

LatticePolygon upsilon(Int d) { return hull({{-d, -d}, {d, 0}, {0, d}}); }

LatticePolygon rectangle(Int a, Int b) { return hull({{0, 0}, {a, 0}, {a, b}, {0, b}}); }

LatticePolygon lawrence_prism(Int a, Int b) { return hull({{0, 0}, {a, 0}, {b, 1}, {0, 1}}); }

std::string to_string(const SpecialShape& shape) {
    using K = SpecialShape::Kind;
    auto one = [&](const char* name) { return std::string(name) + "(" + std::to_string(shape.first) + ")"; };
    auto two = [&](const char* name) {
        return std::string(name) + "(" + std::to_string(shape.first) + "," + std::to_string(shape.second) + ")";
    };
    switch (shape.kind) {
    case K::None: return "None";
    case K::StandardTriangle: return one("StandardTriangle");
    case K::Upsilon: return one("Upsilon");
    case K::RectangleUnimodular: return two("RectangleUnimodular");
    case K::LawrencePrism: return two("LawrencePrism");
    }
    return "?";
}

namespace {

// Common edge length of a triangle whose edges all have the same integral length.
std::optional<Int> equilateral_length(const LatticePolygon& p) {
    if (!p.is_two_dim() || p.vertex_count() != 3) return std::nullopt;
    Int d = integral_length(p.vertex(0), p.vertex(1));
    if (integral_length(p.vertex(1), p.vertex(2)) != d || integral_length(p.vertex(2), p.vertex(0)) != d)
        return std::nullopt;
    return d;
}

} // namespace

std::optional<Int> as_standard_triangle(const LatticePolygon& polygon) {
    auto d = equilateral_length(polygon);
    if (d && are_equivalent(polygon, standard_triangle(*d))) return d;
    return std::nullopt;
}

std::optional<Int> as_upsilon(const LatticePolygon& polygon) {
    auto d = equilateral_length(polygon);
    if (d && are_equivalent(polygon, upsilon(*d))) return d;
    return std::nullopt;
}

std::optional<std::pair<Int, Int>> as_rectangle(const LatticePolygon& polygon) {
    if (!polygon.is_two_dim() || polygon.vertex_count() != 4) return std::nullopt;
    Int a = integral_length(polygon.vertex(0), polygon.vertex(1));
    Int b = integral_length(polygon.vertex(1), polygon.vertex(2));
    if (a > b) std::swap(a, b);
    if (are_equivalent(polygon, rectangle(a, b))) return std::pair{a, b};
    return std::nullopt;
}

SpecialShape recognize_special(const LatticePolygon& polygon) {
    if (!polygon.is_two_dim())
        throw PreconditionError("shape recognition needs a two-dimensional polygon, got " + to_string(polygon));
    if (auto d = as_standard_triangle(polygon)) return SpecialShape::standard_triangle(*d);
    if (auto d = as_upsilon(polygon)) return SpecialShape::upsilon(*d);
    if (auto ab = as_rectangle(polygon)) return SpecialShape::rectangle(ab->first, ab->second);
    if (auto form = lawrence_form(polygon)) return SpecialShape::lawrence_prism(form->a, form->b);
    return SpecialShape::none();
}

} // namespace latsize
