#include "latsize/interior.hpp"

#include "latsize/errors.hpp"

#include <sstream>

namespace latsize {

LatticePolygon interior_hull(const LatticePolygon& polygon) {
    if (!polygon.is_two_dim()) return {};
    std::vector<LatticePoint> extremes;
    for (Int y = polygon.min_y() + 1; y < polygon.max_y(); ++y) {
        if (auto row = polygon.interior_row(y)) {
            extremes.push_back({row->first, y});
            if (row->second != row->first) extremes.push_back({row->second, y});
        }
    }
    return hull(extremes);
}

LatticePolygon move_out(const LatticePolygon& polygon) {
    if (!polygon.is_two_dim())
        throw PreconditionError("move_out needs a two-dimensional polygon, got " + to_string(polygon));
    auto lines = polygon.edge_lines();
    for (auto& line : lines) line.c += 1;

    const std::size_t n = lines.size();
    auto intersect = [&](std::size_t i, std::size_t j, Wide& x_num, Wide& y_num, Wide& den) {
        const auto& l1 = lines[i];
        const auto& l2 = lines[j];
        den = Wide(l1.a) * l2.b - Wide(l1.b) * l2.a;
        if (den == 0) return false;
        x_num = l1.c * l2.b - Wide(l1.b) * l2.c;
        y_num = Wide(l1.a) * l2.c - l1.c * l2.a;
        return true;
    };
    auto feasible = [&](Wide x_num, Wide y_num, Wide den) {
        // Evaluate a*x + b*y <= c scaled by den (sign-corrected).
        Wide s = den > 0 ? 1 : -1;
        for (const auto& l : lines)
            if ((Wide(l.a) * x_num + Wide(l.b) * y_num) * s > l.c * den * s) return false;
        return true;
    };

    // Adjacent shifted edges must meet in lattice points.
    for (std::size_t i = 0; i < n; ++i) {
        Wide x = 0, y = 0, d = 1;
        intersect(i, (i + 1) % n, x, y, d);
        if (x % d != 0 || y % d != 0) {
            std::ostringstream msg;
            msg << to_string(polygon) << " is not an interior polygon: shifted edges " << i << " and "
                << (i + 1) % n << " meet at (" << to_string(x) << '/' << to_string(d) << ','
                << to_string(y) << '/' << to_string(d) << ')';
            throw NotAnInteriorPolygon(msg.str());
        }
    }
    // Vertices of the half-plane intersection (an edge may disappear after shifting).
    std::vector<LatticePoint> corners;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Wide x = 0, y = 0, d = 1;
            if (!intersect(i, j, x, y, d) || !feasible(x, y, d)) continue;
            if (x % d != 0 || y % d != 0)
                throw NotAnInteriorPolygon(to_string(polygon) + " moves out to a non-lattice polygon");
            corners.push_back({narrow(x / d, "move_out"), narrow(y / d, "move_out")});
        }
    }
    return hull(corners);
}

OnionTrace onion_skins(const LatticePolygon& polygon) {
    if (polygon.empty()) throw PreconditionError("onion skins of the empty polygon");
    OnionTrace trace;
    for (LatticePolygon skin = polygon; !skin.empty(); skin = interior_hull(skin)) trace.skins.push_back(skin);
    return trace;
}

} // namespace latsize
