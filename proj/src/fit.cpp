#include "latsize/errors.hpp"
#include "latsize/size.hpp"
#include "latsize/width.hpp"

#include <cmath>
#include <limits>
#include <tuple>

namespace latsize {

TargetShape TargetShape::box(Int a, Int b) {
    if (a < 0 || a > b) throw PreconditionError("box dimensions must satisfy 0 <= a <= b");
    return {Kind::Box, a, b};
}

std::string to_string(const TargetShape& shape) {
    switch (shape.kind) {
    case TargetShape::Kind::Sigma: return "Sigma";
    case TargetShape::Kind::Square: return "Square";
    case TargetShape::Kind::Box: return "Box(" + std::to_string(shape.a) + "," + std::to_string(shape.b) + ")";
    }
    return "?";
}

Int empty_size(TargetShape::Kind kind) { return kind == TargetShape::Kind::Sigma ? -2 : -1; }

namespace {

struct Extent {
    Wide lo;
    Wide hi;
};

Extent extent_along(const LatticePolygon& polygon, LatticePoint u) {
    Extent e{dot(u, polygon.vertex(0)), dot(u, polygon.vertex(0))};
    for (const auto& p : polygon.vertices()) {
        Wide v = dot(u, p);
        e.lo = std::min(e.lo, v);
        e.hi = std::max(e.hi, v);
    }
    return e;
}

// Order of normalized directions (box rows).
bool before(LatticePoint u, LatticePoint v) {
    return std::tuple{norm2(u), u.x, u.y} < std::tuple{norm2(v), v.x, v.y};
}

// Order of signed directions (Sigma rows), as in signed_primitive_directions.
bool before_signed(LatticePoint u, LatticePoint v) {
    return std::tuple{norm2(u), -u.x, -u.y} < std::tuple{norm2(v), -v.x, -v.y};
}

AffineUnimodularMap rows_map(const LatticePolygon& polygon, LatticePoint u1, LatticePoint u2) {
    return AffineUnimodularMap::from_rows(u1, u2,
                                          {narrow(-extent_along(polygon, u1).lo, "fit translation"),
                                           narrow(-extent_along(polygon, u2).lo, "fit translation")});
}

// Integers k with |v0 + k*u1|^2 <= norm_bound, as a superset range.
std::pair<Int, Int> line_range(LatticePoint u1, LatticePoint v0, Int norm_bound) {
    const long double n1 = static_cast<long double>(norm2(u1));
    const long double center = -static_cast<long double>(dot(v0, u1)) / n1;
    const long double half = std::sqrt(std::max<long double>(0, static_cast<long double>(norm_bound) / n1));
    return {static_cast<Int>(std::floor(center - half)) - 1, static_cast<Int>(std::ceil(center + half)) + 1};
}

std::optional<AffineUnimodularMap> fit_degenerate(const LatticePolygon& polygon, const TargetShape& shape, Int d) {
    const Int reach = shape.kind == TargetShape::Kind::Box ? shape.b : d;
    const LatticePoint p = polygon.vertex(0);
    if (polygon.kind() == PolygonKind::Point) {
        if (reach < 0) return std::nullopt;
        return AffineUnimodularMap::translation({-p.x, -p.y});
    }
    const LatticePoint q = polygon.vertex(1);
    if (integral_length(p, q) > reach) return std::nullopt;
    const LatticePoint e = primitive(q - p);
    const LatticePoint f = complete_basis(e);
    // Rows (f.y, -f.x) and (-e.y, e.x) send e to (1, 0); swapped they send it to (0, 1).
    LatticePoint along{f.y, -f.x}, across{-e.y, e.x};
    if (shape.kind == TargetShape::Kind::Box) std::swap(along, across);
    return rows_map(polygon, along, across);
}

std::optional<AffineUnimodularMap> fit_sigma(const LatticePolygon& polygon, Int d) {
    const Int bound = direction_norm_bound(polygon, d);
    for (const auto& u1 : signed_primitive_directions(bound)) {
        const Extent e1 = extent_along(polygon, u1);
        if (e1.hi - e1.lo > d) continue;
        const LatticePoint v0 = complete_basis(u1);
        const auto [k_lo, k_hi] = line_range(u1, v0, bound);
        std::optional<LatticePoint> best;
        for (Int k = k_lo; k <= k_hi; ++k) {
            const LatticePoint base = v0 + k * u1;
            for (const LatticePoint u2 : {base, LatticePoint{-base.x, -base.y}}) {
                if (norm2(u2) > bound || (best && !before_signed(u2, *best))) continue;
                const Extent e2 = extent_along(polygon, u2);
                if (e2.hi - e2.lo > d) continue;
                const Extent diagonal = extent_along(polygon, u1 + u2);
                if (diagonal.hi - e1.lo - e2.lo <= d) best = u2;
            }
        }
        if (best) return rows_map(polygon, u1, *best);
    }
    return std::nullopt;
}

std::optional<AffineUnimodularMap> fit_box(const LatticePolygon& polygon, Int a, Int b) {
    const Int bound1 = direction_norm_bound(polygon, a);
    const Int bound2 = direction_norm_bound(polygon, b);
    for (const auto& u1 : primitive_directions(bound1)) {
        if (width_along(polygon, u1) > a) continue;
        const LatticePoint v0 = complete_basis(u1);
        const auto [k_lo, k_hi] = line_range(u1, v0, bound2);
        std::optional<LatticePoint> best;
        for (Int k = k_lo; k <= k_hi; ++k) {
            const LatticePoint u2 = normalize_direction(v0 + k * u1);
            if (norm2(u2) > bound2 || (best && !before(u2, *best))) continue;
            if (width_along(polygon, u2) <= b) best = u2;
        }
        if (best) return rows_map(polygon, u1, *best);
    }
    return std::nullopt;
}

// argmin over integers of a convex function, starting the descent at k0.
template <typename F>
Int convex_argmin(F f, Int k0) {
    auto descend = [&](auto g, Int start) {
        // g convex with g(start + 1) < g(start): find the first k > start with g(k + 1) >= g(k).
        Int lo = start, step = 1, hi = start + 1;
        while (g(hi + 1) < g(hi)) {
            lo = hi;
            step *= 2;
            hi = start + step;
        }
        while (hi - lo > 1) {
            Int mid = lo + (hi - lo) / 2;
            if (g(mid + 1) < g(mid)) lo = mid;
            else hi = mid;
        }
        return hi;
    };
    if (f(k0 + 1) < f(k0)) return descend(f, k0);
    if (f(k0 - 1) < f(k0)) return -descend([&](Int k) { return f(-k); }, -k0);
    return k0;
}

} // namespace

std::optional<AffineUnimodularMap> fit_into(const LatticePolygon& polygon, const TargetShape& shape, Int d) {
    if (polygon.empty()) throw PreconditionError("fit_into the empty polygon");
    if (shape.kind != TargetShape::Kind::Box && d < 0) return std::nullopt;
    if (polygon.is_degenerate()) return fit_degenerate(polygon, shape, d);
    switch (shape.kind) {
    case TargetShape::Kind::Sigma: return fit_sigma(polygon, d);
    case TargetShape::Kind::Square: return fit_box(polygon, d, d);
    case TargetShape::Kind::Box: return fit_box(polygon, shape.a, shape.b);
    }
    return std::nullopt;
}

bool image_contained(const LatticePolygon& polygon, const AffineUnimodularMap& map, const TargetShape& shape,
                     Int d) {
    for (const auto& p : polygon.vertices()) {
        const LatticePoint q = map(p);
        if (q.x < 0 || q.y < 0) return false;
        switch (shape.kind) {
        case TargetShape::Kind::Sigma:
            if (Wide(q.x) + q.y > d) return false;
            break;
        case TargetShape::Kind::Square:
            if (q.x > d || q.y > d) return false;
            break;
        case TargetShape::Kind::Box:
            if (q.x > shape.a || q.y > shape.b) return false;
            break;
        }
    }
    return true;
}

BoxCertificate minimal_box(const LatticePolygon& polygon) {
    if (polygon.empty()) throw PreconditionError("minimal box of the empty polygon");
    const WidthResult width = lattice_width(polygon);
    const Int b = lattice_size_square(polygon).value;

    std::optional<std::tuple<Int, LatticePoint, LatticePoint>> best;
    for (const auto& u1 : width.directions) {
        const LatticePoint v0 = complete_basis(u1);
        auto second_width = [&](Int k) { return width_along(polygon, v0 + k * u1); };
        const Int k0 = static_cast<Int>(std::llround(-static_cast<long double>(dot(v0, u1)) /
                                                     static_cast<long double>(norm2(u1))));
        const Int k = convex_argmin(second_width, k0);
        const Int w2 = second_width(k);
        if (!best || w2 < std::get<0>(*best)) best = std::tuple{w2, u1, normalize_direction(v0 + k * u1)};
    }
    const auto [w2, u1, u2] = *best;
    if (w2 != b)
        throw InternalError("minimal box: best second width " + std::to_string(w2) +
                            " differs from the square lattice size " + std::to_string(b) + " for " +
                            to_string(polygon));
    BoxCertificate cert{width.width, b, rows_map(polygon, u1, u2)};
    if (!image_contained(polygon, cert.witness, TargetShape::box(cert.a, cert.b)))
        throw InternalError("minimal box witness does not fit for " + to_string(polygon));
    return cert;
}

} // namespace latsize
