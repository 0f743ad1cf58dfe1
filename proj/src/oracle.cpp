#include "latsize/oracle.hpp"

#include "latsize/errors.hpp"
#include "latsize/width.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace latsize {

Int oracle_size(const LatticePolygon& polygon, TargetShape::Kind kind) {
    if (polygon.empty()) throw PreconditionError("oracle size of the empty polygon");
    if (kind == TargetShape::Kind::Box) throw PreconditionError("oracle size is defined for Sigma and Square");
    const TargetShape body{kind, 0, 0};
    for (Int d = lattice_width(polygon).width;; ++d)
        if (fit_into(polygon, body, d)) return d;
}

ParetoSet oracle_box_pareto(const LatticePolygon& polygon, Int limit) {
    if (polygon.empty()) throw PreconditionError("Pareto set of the empty polygon");
    ParetoSet out;
    Int best_b = limit + 1; // smallest feasible b over all smaller a
    for (Int a = 0; a <= limit; ++a) {
        // Feasibility is monotone in b, so the first feasible b in the row is its minimum.
        for (Int b = a; b < best_b; ++b) {
            if (fit_into(polygon, TargetShape::box(a, b))) {
                out.pairs.emplace_back(a, b);
                best_b = b;
                break;
            }
        }
    }
    return out;
}

LatticePolygon random_polygon(std::uint64_t seed, Int k) {
    if (k < 1) throw PreconditionError("random polygon needs k >= 1");
    std::mt19937_64 rng(seed);
    const auto side = static_cast<std::uint64_t>(k + 1);
    while (true) {
        const std::size_t count = 3 + rng() % 6;
        std::vector<LatticePoint> points;
        for (std::size_t i = 0; i < count; ++i)
            points.push_back({static_cast<Int>(rng() % side), static_cast<Int>(rng() % side)});
        LatticePolygon p = hull(points);
        if (p.is_two_dim()) return p;
    }
}

AffineUnimodularMap random_unimodular_map(std::mt19937_64& rng, Int entry_bound, Int shift) {
    AffineUnimodularMap m;
    const int steps = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < steps; ++i) {
        AffineUnimodularMap e;
        switch (rng() % 5) {
        case 0: e = {1, 1, 0, 1}; break;
        case 1: e = {1, -1, 0, 1}; break;
        case 2: e = {1, 0, 1, 1}; break;
        case 3: e = {1, 0, -1, 1}; break;
        default: e = (rng() % 2) ? AffineUnimodularMap{0, 1, 1, 0} : AffineUnimodularMap{-1, 0, 0, 1}; break;
        }
        AffineUnimodularMap next = e.after(m);
        if (std::max({abs_int(next.m11()), abs_int(next.m12()), abs_int(next.m21()), abs_int(next.m22())}) <=
            entry_bound)
            m = next;
    }
    const auto span = static_cast<std::uint64_t>(2 * shift + 1);
    return AffineUnimodularMap(m.m11(), m.m12(), m.m21(), m.m22(), static_cast<Int>(rng() % span) - shift,
                               static_cast<Int>(rng() % span) - shift);
}

std::vector<LatticePolygon> census(Int k) {
    if (k < 1 || k > 3) throw PreconditionError("census supports 1 <= k <= 3");
    std::vector<LatticePoint> grid;
    for (Int x = 0; x <= k; ++x)
        for (Int y = 0; y <= k; ++y) grid.push_back({x, y});
    auto less = [](const LatticePolygon& a, const LatticePolygon& b) { return a.vertices() < b.vertices(); };
    std::set<LatticePolygon, decltype(less)> seen(less);
    std::vector<LatticePoint> subset;
    for (std::uint32_t mask = 0; mask < (1u << grid.size()); ++mask) {
        if (std::popcount(mask) < 3) continue;
        subset.clear();
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (mask & (1u << i)) subset.push_back(grid[i]);
        LatticePolygon p = hull(subset);
        if (p.is_two_dim()) seen.insert(std::move(p));
    }
    return {seen.begin(), seen.end()};
}

} // namespace latsize
