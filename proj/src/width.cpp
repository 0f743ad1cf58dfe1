#include "latsize/width.hpp"

#include "latsize/errors.hpp"
#include "latsize/interior.hpp"
#include "latsize/shapes.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>

namespace latsize {

namespace {

using Big = boost::multiprecision::int256_t;

Big big(Wide v) {
    // int256_t has no __int128 constructor; go through two 64-bit halves.
    bool negative = v < 0;
    unsigned __int128 m = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Big out = Big(static_cast<std::uint64_t>(m >> 64));
    out <<= 64;
    out += Big(static_cast<std::uint64_t>(m));
    return negative ? Big(-out) : out;
}

Int isqrt(Int n) {
    if (n <= 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && Wide(r) * r > n) --r;
    while (Wide(r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace

Int width_along(const LatticePolygon& polygon, LatticePoint u) {
    if (polygon.empty()) throw PreconditionError("width of the empty polygon");
    if (u.x == 0 && u.y == 0) throw PreconditionError("width along the zero vector");
    Wide lo = dot(u, polygon.vertex(0)), hi = lo;
    for (const auto& p : polygon.vertices()) {
        Wide v = dot(u, p);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return narrow(hi - lo, "width_along");
}

EuclideanWidth minimal_euclidean_width(const LatticePolygon& polygon) {
    if (!polygon.is_two_dim()) throw PreconditionError("Euclidean width needs a two-dimensional polygon");
    const auto& v = polygon.vertices();
    const std::size_t n = v.size();
    EuclideanWidth best{0, 0};
    std::size_t j = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint p = v[i];
        const LatticePoint e = v[(i + 1) % n] - p;
        // Antipodal vertex: cross(e, v[j] - p) is unimodal along the boundary.
        while (cross(e, v[(j + 1) % n] - p) > cross(e, v[j % n] - p)) j = (j + 1) % n;
        EuclideanWidth candidate{cross(e, v[j % n] - p), norm2(e)};
        // candidate < best  <=>  c1^2 * n2 < c2^2 * n1
        if (best.edge_norm2 == 0 ||
            big(candidate.cross) * big(candidate.cross) * big(best.edge_norm2) <
                big(best.cross) * big(best.cross) * big(candidate.edge_norm2))
            best = candidate;
    }
    return best;
}

Int direction_norm_bound(const LatticePolygon& polygon, Int max_width) {
    if (max_width < 0) return 0;
    const EuclideanWidth w = minimal_euclidean_width(polygon);
    Big bound = big(max_width) * big(max_width) * big(w.edge_norm2) / (big(w.cross) * big(w.cross));
    if (bound > Big(std::numeric_limits<Int>::max() / 4))
        throw GuardError("direction enumeration bound too large");
    return static_cast<Int>(bound);
}

std::vector<LatticePoint> primitive_directions(Int norm_bound) {
    std::vector<LatticePoint> out;
    if (norm_bound >= 1) out.push_back({0, 1});
    for (Int a = 1, amax = isqrt(norm_bound); a <= amax; ++a) {
        Int bmax = isqrt(norm_bound - a * a);
        for (Int b = -bmax; b <= bmax; ++b)
            if (gcd_int(a, abs_int(b)) == 1) out.push_back({a, b});
    }
    std::sort(out.begin(), out.end(), [](LatticePoint u, LatticePoint v) {
        return std::tuple{norm2(u), u.x, u.y} < std::tuple{norm2(v), v.x, v.y};
    });
    return out;
}

std::vector<LatticePoint> signed_primitive_directions(Int norm_bound) {
    std::vector<LatticePoint> out;
    for (const auto& u : primitive_directions(norm_bound)) {
        out.push_back(u);
        out.push_back({-u.x, -u.y});
    }
    std::sort(out.begin(), out.end(), [](LatticePoint u, LatticePoint v) {
        return std::tuple{norm2(u), -u.x, -u.y} < std::tuple{norm2(v), -v.x, -v.y};
    });
    return out;
}

WidthResult lattice_width(const LatticePolygon& polygon) {
    switch (polygon.kind()) {
    case PolygonKind::Empty: return {};
    case PolygonKind::Point: return {0, {{0, 1}, {1, 0}}};
    case PolygonKind::Segment: {
        LatticePoint e = primitive(polygon.vertex(1) - polygon.vertex(0));
        return {0, {normalize_direction({-e.y, e.x})}};
    }
    case PolygonKind::TwoDim: break;
    }
    const Int w0 = std::min(width_along(polygon, {1, 0}), width_along(polygon, {0, 1}));
    WidthResult result{w0, {}};
    for (const auto& u : primitive_directions(direction_norm_bound(polygon, w0))) {
        const Int w = width_along(polygon, u);
        if (w < result.width) {
            result.width = w;
            result.directions.clear();
        }
        if (w == result.width) result.directions.push_back(u);
    }
    return result;
}

std::string to_string(WidthRule rule) {
    switch (rule) {
    case WidthRule::Convention: return "Convention";
    case WidthRule::StandardTriangleException: return "StandardTriangleException";
    case WidthRule::BaseTable: return "BaseTable";
    case WidthRule::PeelStep: return "PeelStep";
    }
    return "?";
}

WidthRecursion lattice_width_recursive(const LatticePolygon& polygon) {
    WidthRecursion out;
    LatticePolygon skin = polygon;
    Int peeled = 0;
    while (true) {
        if (skin.empty()) {
            out.width = -1;
            break;
        }
        if (skin.is_degenerate()) {
            out.trace.push_back({skin, WidthRule::Convention, 0});
            out.width = 0;
            break;
        }
        if (auto d = as_standard_triangle(skin)) {
            out.trace.push_back({skin, WidthRule::StandardTriangleException, *d});
            out.width = *d;
            break;
        }
        LatticePolygon inner = interior_hull(skin);
        if (inner.is_degenerate()) {
            Int base = 2;
            if (inner.empty() && !are_equivalent(skin, standard_triangle(2))) base = 1;
            out.trace.push_back({skin, WidthRule::BaseTable, base});
            out.width = base;
            break;
        }
        out.trace.push_back({skin, WidthRule::PeelStep, 2});
        peeled += 2;
        skin = std::move(inner);
    }
    // The innermost entry carries its absolute value, so contributions sum to the width.
    out.width += peeled;
    return out;
}

std::optional<LawrenceForm> lawrence_form(const LatticePolygon& polygon) {
    if (!polygon.is_two_dim()) return std::nullopt;
    const WidthResult w = lattice_width(polygon);
    if (w.width != 1) return std::nullopt;
    const LatticePoint u = w.directions.front();
    const LatticePoint v = complete_basis(u);

    Int ymin = std::numeric_limits<Int>::max();
    for (const auto& p : polygon.vertices()) ymin = std::min(ymin, narrow(dot(u, p), "lawrence"));
    AffineUnimodularMap strip = AffineUnimodularMap::from_rows(v, u, {0, -ymin});
    LatticePolygon image = apply_map(strip, polygon);

    auto row_range = [&](Int y) {
        Int lo = std::numeric_limits<Int>::max(), hi = std::numeric_limits<Int>::min();
        for (const auto& p : image.vertices())
            if (p.y == y) lo = std::min(lo, p.x), hi = std::max(hi, p.x);
        return std::pair{lo, hi};
    };
    auto [x0, x0_end] = row_range(0);
    auto [x1, x1_end] = row_range(1);
    Int a = x0_end - x0, b = x1_end - x1;
    // Shear the top row so both rows start at x = 0.
    AffineUnimodularMap align(1, x0 - x1, 0, 1, -x0, 0);
    AffineUnimodularMap map = align.after(strip);
    if (a < b) {
        // Reflect across y = 1/2 so the longer row is at the bottom.
        AffineUnimodularMap flip(1, 0, 0, -1, 0, 1);
        map = flip.after(map);
        std::swap(a, b);
    }
    if (apply_map(map, polygon) != lawrence_prism(a, b))
        throw InternalError("Lawrence normalization failed for " + to_string(polygon));
    return LawrenceForm{a, b, map};
}

} // namespace latsize
