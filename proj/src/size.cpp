#include "latsize/size.hpp"

#include "latsize/errors.hpp"
#include "latsize/interior.hpp"
#include "latsize/shapes.hpp"
#include "latsize/width.hpp"

namespace latsize {

std::string to_string(SizeRule rule) {
    switch (rule) {
    case SizeRule::Convention: return "Convention";
    case SizeRule::GenericStep: return "GenericStep";
    case SizeRule::LawrencePrism: return "LawrencePrism";
    case SizeRule::TwoSigma: return "TwoSigma";
    case SizeRule::SmallTriangleTable: return "SmallTriangleTable";
    case SizeRule::RectangleAB: return "RectangleAB";
    case SizeRule::ParallelEdge: return "ParallelEdge";
    case SizeRule::DegenerateBaseSearch: return "DegenerateBaseSearch";
    }
    return "?";
}

std::optional<ParallelEdgePair> parallel_edge_exception(const LatticePolygon& outer, const LatticePolygon& inner,
                                                        Int threshold) {
    if (!outer.is_two_dim() || inner.empty())
        throw PreconditionError("parallel edge test needs a two-dimensional polygon with non-empty interior");
    if (interior_hull(outer) != inner)
        throw PreconditionError(to_string(inner) + " is not the interior hull of " + to_string(outer));

    std::optional<ParallelEdgePair> best;
    const auto edges = outer.edges();
    const auto lines = outer.edge_lines();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        // Inner vertices on the inward unit shift of this edge's supporting line.
        std::vector<LatticePoint> on_line;
        for (const auto& v : inner.vertices())
            if (lines[i].eval(v) == lines[i].c - 1) on_line.push_back(v);
        if (on_line.empty()) continue;
        const LatticePolygon face = hull(on_line);
        const LatticePoint f0 = face.vertex(0);
        const LatticePoint f1 = face.kind() == PolygonKind::Segment ? face.vertex(1) : f0;
        ParallelEdgePair pair{integral_length(edges[i].first, edges[i].second), integral_length(f0, f1), edges[i],
                              {f0, f1}};
        if (pair.r - pair.s >= threshold && (!best || pair.r - pair.s > best->r - best->s)) best = pair;
    }
    return best;
}

namespace {

using Kind = TargetShape::Kind;

Int convention_value(const LatticePolygon& skin) {
    if (skin.kind() == PolygonKind::Point) return 0;
    return integral_length(skin.vertex(0), skin.vertex(1));
}

// Smallest d >= lattice width admitting a fit into d * body.
Int search_value(const LatticePolygon& polygon, const TargetShape& body) {
    for (Int d = lattice_width(polygon).width;; ++d)
        if (fit_into(polygon, body, d)) return d;
}

struct TableEntry {
    LatticePolygon polygon;
    Int value;
};

// Explicit exceptions with a degenerate interior.
const std::vector<TableEntry>& small_table(Kind kind) {
    static const std::vector<TableEntry> sigma{{hull({{0, 0}, {4, 0}, {0, 2}}), 4}};
    static const std::vector<TableEntry> square{
        {hull({{0, 0}, {3, 0}, {0, 3}}), 3},         {hull({{0, 0}, {3, 0}, {0, 2}}), 3},
        {hull({{0, 0}, {3, 0}, {2, 1}, {0, 2}}), 3}, {hull({{0, 0}, {3, 0}, {1, 2}, {0, 2}}), 3},
        {hull({{0, 0}, {4, 0}, {0, 2}}), 4},
    };
    return kind == Kind::Sigma ? sigma : square;
}

std::optional<Int> table_value(const LatticePolygon& polygon, Kind kind) {
    for (const auto& entry : small_table(kind))
        if (are_equivalent(polygon, entry.polygon)) return entry.value;
    return std::nullopt;
}

struct SkinValue {
    Int value;
    SizeStep step;
};

// Value of a two-dimensional skin from the value of its interior hull.
SkinValue step_value(const LatticePolygon& skin, const LatticePolygon& inner, Int inner_value, Kind kind) {
    const bool sigma = kind == Kind::Sigma;
    const TargetShape body = sigma ? TargetShape::sigma() : TargetShape::square();
    auto make = [&](Int value, SizeRule rule, Int r = 0, Int s = 0) {
        return SkinValue{value, SizeStep{skin, rule, value - inner_value, r, s}};
    };

    if (inner.empty()) {
        // Width one (Lawrence prisms) or twice the standard triangle.
        if (auto form = lawrence_form(skin)) {
            Int value = form->a;
            if (sigma && form->a == form->b) value = form->a + 1;
            return make(value, SizeRule::LawrencePrism, form->a, form->b);
        }
        if (are_equivalent(skin, standard_triangle(2))) return make(2, SizeRule::TwoSigma);
        throw InternalError(to_string(skin) + " has no interior points but is neither a Lawrence prism nor 2Sigma");
    }
    if (sigma) {
        if (auto ab = as_rectangle(skin); ab && ab->first >= 2)
            return make(ab->first + ab->second, SizeRule::RectangleAB, ab->first, ab->second);
    }
    if (inner.is_degenerate()) {
        if (auto value = table_value(skin, kind)) return make(*value, SizeRule::SmallTriangleTable);
    }
    if (auto pair = parallel_edge_exception(skin, inner, 3)) {
        // A positive-length inner face fixes the inner size to its length.
        const bool face_determines_inner = pair->s > 0 || inner.kind() == PolygonKind::Point;
        if (face_determines_inner && pair->s != inner_value)
            throw InternalError("parallel edge rule: inner face length " + std::to_string(pair->s) +
                                " but inner size " + std::to_string(inner_value) + " for " + to_string(skin));
        return make(pair->r, SizeRule::ParallelEdge, pair->r, pair->s);
    }
    if (inner.is_degenerate()) return make(search_value(skin, body), SizeRule::DegenerateBaseSearch);
    return make(inner_value + (sigma ? 3 : 2), SizeRule::GenericStep);
}

SizeCertificate lattice_size(const LatticePolygon& polygon, Kind kind) {
    const TargetShape body = kind == Kind::Sigma ? TargetShape::sigma() : TargetShape::square();
    SizeCertificate cert{body, empty_size(kind), AffineUnimodularMap::identity(), {}};
    if (polygon.empty()) return cert;

    const auto skins = onion_skins(polygon).skins;
    std::vector<SizeStep> steps(skins.size());
    Int value = empty_size(kind);
    LatticePolygon inner;
    for (std::size_t i = skins.size(); i-- > 0;) {
        const auto& skin = skins[i];
        if (skin.is_degenerate()) {
            Int v = convention_value(skin);
            steps[i] = SizeStep{skin, SizeRule::Convention, v - value};
            value = v;
        } else {
            auto [v, step] = step_value(skin, inner, value, kind);
            steps[i] = std::move(step);
            value = v;
        }
        inner = skin;
    }
    cert.value = value;
    cert.trace = std::move(steps);

    auto witness = fit_into(polygon, body, value);
    if (!witness)
        throw InternalError("no witness realizes " + to_string(body) + " size " + std::to_string(value) + " for " +
                            to_string(polygon));
    cert.witness = *witness;
    return cert;
}

} // namespace

SizeCertificate lattice_size_sigma(const LatticePolygon& polygon) { return lattice_size(polygon, Kind::Sigma); }

SizeCertificate lattice_size_square(const LatticePolygon& polygon) { return lattice_size(polygon, Kind::Square); }

} // namespace latsize
