#include "latsize/polygon.hpp"

#include "latsize/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>

namespace latsize {

Int narrow(Wide v, const char* context) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw GuardError(std::string("64-bit overflow in ") + context);
    return static_cast<Int>(v);
}

std::string to_string(Wide v) {
    if (v == 0) return "0";
    bool negative = v < 0;
    std::string digits;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        digits.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

std::ostream& operator<<(std::ostream& os, LatticePoint p) {
    return os << '(' << p.x << ',' << p.y << ')';
}

Int coordinate_guard() {
    static const Int guard = [] {
        Int g = Int{1} << 31;
        if (const char* env = std::getenv("LATSIZE_GUARD")) {
            char* end = nullptr;
            long long v = std::strtoll(env, &end, 10);
            if (end != env && v > 0 && v < g) g = v;
        }
        return g;
    }();
    return guard;
}

void check_guard(LatticePoint p) {
    const Int g = coordinate_guard();
    if (abs_int(p.x) > g || abs_int(p.y) > g) {
        std::ostringstream msg;
        msg << "coordinate guard " << g << " exceeded by " << p;
        throw GuardError(msg.str());
    }
}

Int integral_length(LatticePoint p, LatticePoint q) {
    return gcd_int(abs_int(q.x - p.x), abs_int(q.y - p.y));
}

std::string to_string(PolygonKind kind) {
    switch (kind) {
    case PolygonKind::Empty: return "Empty";
    case PolygonKind::Point: return "Point";
    case PolygonKind::Segment: return "Segment";
    case PolygonKind::TwoDim: return "TwoDim";
    }
    return "?";
}

LatticePoint primitive(LatticePoint v) {
    Int g = gcd_int(abs_int(v.x), abs_int(v.y));
    if (g == 0) throw PreconditionError("zero vector has no primitive direction");
    return {v.x / g, v.y / g};
}

LatticePoint complete_basis(LatticePoint v) {
    auto [g, s, t] = ext_gcd(v.x, v.y);
    if (g != 1) throw PreconditionError("vector is not primitive");
    return {-t, s};
}

LatticePoint normalize_direction(LatticePoint v) {
    if (v.x < 0 || (v.x == 0 && v.y < 0)) return {-v.x, -v.y};
    return v;
}

// ---------------------------------------------------------------------------
// Hull

LatticePolygon hull(std::span<const LatticePoint> points) {
    for (const auto& p : points) check_guard(p);
    std::vector<LatticePoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return {};
    if (pts.size() == 1) return {PolygonKind::Point, std::move(pts)};

    // Andrew's monotone chain, dropping collinear points.
    std::vector<LatticePoint> chain(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(chain[k - 1] - chain[k - 2], p - chain[k - 2]) <= 0) --k;
        chain[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        const auto& p = pts[i];
        while (k >= lower && cross(chain[k - 1] - chain[k - 2], p - chain[k - 2]) <= 0) --k;
        chain[k++] = p;
    }
    chain.resize(k - 1);
    if (chain.size() == 2) {
        std::sort(chain.begin(), chain.end());
        return {PolygonKind::Segment, std::move(chain)};
    }
    // The lower chain starts at the lexicographic minimum, so the rotation is canonical.
    return {PolygonKind::TwoDim, std::move(chain)};
}

std::vector<std::pair<LatticePoint, LatticePoint>> LatticePolygon::edges() const {
    std::vector<std::pair<LatticePoint, LatticePoint>> out;
    if (kind_ == PolygonKind::Segment) {
        out.emplace_back(vertices_[0], vertices_[1]);
    } else if (kind_ == PolygonKind::TwoDim) {
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            out.emplace_back(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
    }
    return out;
}

std::vector<EdgeLine> LatticePolygon::edge_lines() const {
    std::vector<EdgeLine> out;
    if (kind_ != PolygonKind::TwoDim) return out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& p = vertices_[i];
        const auto& q = vertices_[(i + 1) % vertices_.size()];
        LatticePoint n = primitive({q.y - p.y, p.x - q.x});
        EdgeLine line{n.x, n.y, 0};
        line.c = line.eval(p);
        out.push_back(line);
    }
    return out;
}

bool LatticePolygon::contains(LatticePoint p) const {
    switch (kind_) {
    case PolygonKind::Empty: return false;
    case PolygonKind::Point: return p == vertices_[0];
    case PolygonKind::Segment: {
        const auto& a = vertices_[0];
        const auto& b = vertices_[1];
        if (cross(b - a, p - a) != 0) return false;
        Wide t = dot(b - a, p - a);
        return t >= 0 && t <= norm2(b - a);
    }
    case PolygonKind::TwoDim:
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const auto& a = vertices_[i];
            const auto& b = vertices_[(i + 1) % vertices_.size()];
            if (cross(b - a, p - a) < 0) return false;
        }
        return true;
    }
    return false;
}

bool LatticePolygon::strictly_contains(LatticePoint p) const {
    if (kind_ != PolygonKind::TwoDim) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = vertices_[(i + 1) % vertices_.size()];
        if (cross(b - a, p - a) <= 0) return false;
    }
    return true;
}

bool LatticePolygon::contains(const LatticePolygon& other) const {
    return std::all_of(other.vertices_.begin(), other.vertices_.end(),
                       [this](LatticePoint p) { return contains(p); });
}

Int LatticePolygon::min_x() const {
    if (empty()) throw PreconditionError("bounds of the empty polygon");
    return std::min_element(vertices_.begin(), vertices_.end(),
                            [](auto p, auto q) { return p.x < q.x; })
        ->x;
}
Int LatticePolygon::max_x() const {
    if (empty()) throw PreconditionError("bounds of the empty polygon");
    return std::max_element(vertices_.begin(), vertices_.end(),
                            [](auto p, auto q) { return p.x < q.x; })
        ->x;
}
Int LatticePolygon::min_y() const {
    if (empty()) throw PreconditionError("bounds of the empty polygon");
    return std::min_element(vertices_.begin(), vertices_.end(),
                            [](auto p, auto q) { return p.y < q.y; })
        ->y;
}
Int LatticePolygon::max_y() const {
    if (empty()) throw PreconditionError("bounds of the empty polygon");
    return std::max_element(vertices_.begin(), vertices_.end(),
                            [](auto p, auto q) { return p.y < q.y; })
        ->y;
}

std::optional<std::pair<Int, Int>> LatticePolygon::interior_row(Int y) const {
    if (kind_ != PolygonKind::TwoDim) return std::nullopt;
    Wide lo = min_x();
    Wide hi = max_x();
    for (const auto& line : edge_lines()) {
        // Strictly inside: a*x < c - b*y.
        Wide rhs = line.c - Wide(line.b) * y;
        if (line.a > 0) {
            hi = std::min(hi, ceil_div(rhs, line.a) - 1);
        } else if (line.a < 0) {
            lo = std::max(lo, floor_div(rhs, line.a) + 1);
        } else if (rhs <= 0) {
            return std::nullopt;
        }
        if (lo > hi) return std::nullopt;
    }
    return std::make_pair(static_cast<Int>(lo), static_cast<Int>(hi));
}

LatticePolygon LatticePolygon::translated(LatticePoint t) const {
    std::vector<LatticePoint> moved;
    moved.reserve(vertices_.size());
    for (const auto& p : vertices_) moved.push_back(p + t);
    return hull(moved);
}

std::ostream& operator<<(std::ostream& os, const LatticePolygon& polygon) {
    return os << to_string(polygon);
}

std::string to_string(const LatticePolygon& polygon) {
    std::ostringstream os;
    switch (polygon.kind()) {
    case PolygonKind::Empty: os << "Empty"; break;
    case PolygonKind::Point: os << polygon.vertex(0); break;
    default:
        os << "conv{";
        for (std::size_t i = 0; i < polygon.vertex_count(); ++i)
            os << (i ? "," : "") << polygon.vertex(i);
        os << '}';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Measures

Measures measures(const LatticePolygon& polygon) {
    Measures m;
    switch (polygon.kind()) {
    case PolygonKind::Empty: throw PreconditionError("measures of the empty polygon");
    case PolygonKind::Point:
        m.boundary_count = 1;
        break;
    case PolygonKind::Segment:
        m.boundary_count = integral_length(polygon.vertex(0), polygon.vertex(1)) + 1;
        break;
    case PolygonKind::TwoDim: {
        Wide area2 = 0;
        for (const auto& [p, q] : polygon.edges()) {
            area2 += cross(p, q);
            m.boundary_count += integral_length(p, q);
        }
        m.area2 = narrow(area2, "area");
        for (Int y = polygon.min_y() + 1; y < polygon.max_y(); ++y)
            if (auto row = polygon.interior_row(y)) m.interior_count += row->second - row->first + 1;
        if (m.area2 != 2 * m.interior_count + m.boundary_count - 2)
            throw InternalError("Pick's identity violated for " + to_string(polygon));
        break;
    }
    }
    m.total_count = m.interior_count + m.boundary_count;
    return m;
}

// ---------------------------------------------------------------------------
// Maps

AffineUnimodularMap::AffineUnimodularMap(Int m11, Int m12, Int m21, Int m22, Int t1, Int t2)
    : m11_(m11), m12_(m12), m21_(m21), m22_(m22), t1_(t1), t2_(t2) {
    Wide det = Wide(m11) * m22 - Wide(m12) * m21;
    if (det != 1 && det != -1) throw PreconditionError("matrix is not unimodular");
}

AffineUnimodularMap AffineUnimodularMap::from_rows(LatticePoint row1, LatticePoint row2, LatticePoint t) {
    return {row1.x, row1.y, row2.x, row2.y, t.x, t.y};
}

LatticePoint AffineUnimodularMap::linear(LatticePoint v) const {
    LatticePoint out{narrow(Wide(m11_) * v.x + Wide(m12_) * v.y, "map image"),
                     narrow(Wide(m21_) * v.x + Wide(m22_) * v.y, "map image")};
    return out;
}

LatticePoint AffineUnimodularMap::operator()(LatticePoint p) const {
    LatticePoint out{narrow(Wide(m11_) * p.x + Wide(m12_) * p.y + t1_, "map image"),
                     narrow(Wide(m21_) * p.x + Wide(m22_) * p.y + t2_, "map image")};
    check_guard(out);
    return out;
}

AffineUnimodularMap AffineUnimodularMap::after(const AffineUnimodularMap& o) const {
    auto mul = [](Int a, Int b, Int c, Int d) { return narrow(Wide(a) * b + Wide(c) * d, "compose"); };
    return {mul(m11_, o.m11_, m12_, o.m21_),
            mul(m11_, o.m12_, m12_, o.m22_),
            mul(m21_, o.m11_, m22_, o.m21_),
            mul(m21_, o.m12_, m22_, o.m22_),
            narrow(Wide(m11_) * o.t1_ + Wide(m12_) * o.t2_ + t1_, "compose"),
            narrow(Wide(m21_) * o.t1_ + Wide(m22_) * o.t2_ + t2_, "compose")};
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
    const Int d = determinant(); // +-1, so the adjugate divided by d is integral
    Int i11 = m22_ * d, i12 = -m12_ * d, i21 = -m21_ * d, i22 = m11_ * d;
    Int s1 = narrow(-(Wide(i11) * t1_ + Wide(i12) * t2_), "inverse");
    Int s2 = narrow(-(Wide(i21) * t1_ + Wide(i22) * t2_), "inverse");
    return {i11, i12, i21, i22, s1, s2};
}

std::ostream& operator<<(std::ostream& os, const AffineUnimodularMap& m) {
    return os << "[[" << m.m11() << ',' << m.m12() << "],[" << m.m21() << ',' << m.m22()
              << "]] + (" << m.t1() << ',' << m.t2() << ')';
}

LatticePolygon apply_map(const AffineUnimodularMap& map, const LatticePolygon& polygon) {
    std::vector<LatticePoint> image;
    image.reserve(polygon.vertex_count());
    for (const auto& p : polygon.vertices()) image.push_back(map(p));
    return hull(image);
}

// ---------------------------------------------------------------------------
// Equivalence

namespace {

// Linear map sending columns (e1, e2) to (f1, f2), if integral and unimodular.
std::optional<AffineUnimodularMap> frame_map(LatticePoint e1, LatticePoint e2, LatticePoint f1,
                                             LatticePoint f2, LatticePoint from, LatticePoint to) {
    Wide det_e = cross(e1, e2);
    Wide det_f = cross(f1, f2);
    if (det_e == 0 || (det_e != det_f && det_e != -det_f)) return std::nullopt;
    // M = F * adj(E) / det(E), adj(E) = [[e2.y, -e2.x], [-e1.y, e1.x]].
    Wide n11 = Wide(f1.x) * e2.y - Wide(f2.x) * e1.y;
    Wide n12 = -Wide(f1.x) * e2.x + Wide(f2.x) * e1.x;
    Wide n21 = Wide(f1.y) * e2.y - Wide(f2.y) * e1.y;
    Wide n22 = -Wide(f1.y) * e2.x + Wide(f2.y) * e1.x;
    if (n11 % det_e || n12 % det_e || n21 % det_e || n22 % det_e) return std::nullopt;
    Int m11 = narrow(n11 / det_e, "frame"), m12 = narrow(n12 / det_e, "frame");
    Int m21 = narrow(n21 / det_e, "frame"), m22 = narrow(n22 / det_e, "frame");
    Wide det = Wide(m11) * m22 - Wide(m12) * m21;
    if (det != 1 && det != -1) return std::nullopt;
    Int t1 = narrow(Wide(to.x) - (Wide(m11) * from.x + Wide(m12) * from.y), "frame");
    Int t2 = narrow(Wide(to.y) - (Wide(m21) * from.x + Wide(m22) * from.y), "frame");
    return AffineUnimodularMap(m11, m12, m21, m22, t1, t2);
}

Wide shoelace(const LatticePolygon& p) {
    Wide s = 0;
    for (const auto& [a, b] : p.edges()) s += cross(a, b);
    return s;
}

bool maps_onto(const AffineUnimodularMap& map, const LatticePolygon& from, const LatticePolygon& to) {
    try {
        return apply_map(map, from) == to;
    } catch (const GuardError&) {
        return false;
    }
}

} // namespace

std::optional<AffineUnimodularMap> are_equivalent(const LatticePolygon& first, const LatticePolygon& second) {
    if (first.kind() != second.kind()) return std::nullopt;
    switch (first.kind()) {
    case PolygonKind::Empty: return AffineUnimodularMap::identity();
    case PolygonKind::Point: return AffineUnimodularMap::translation(second.vertex(0) - first.vertex(0));
    case PolygonKind::Segment: {
        const auto [p1, q1] = std::pair{first.vertex(0), first.vertex(1)};
        const auto [p2, q2] = std::pair{second.vertex(0), second.vertex(1)};
        if (integral_length(p1, q1) != integral_length(p2, q2)) return std::nullopt;
        LatticePoint e1 = primitive(q1 - p1), e2 = primitive(q2 - p2);
        auto m = frame_map(e1, complete_basis(e1), e2, complete_basis(e2), p1, p2);
        if (m && maps_onto(*m, first, second)) return m;
        return std::nullopt;
    }
    case PolygonKind::TwoDim: break;
    }

    const std::size_t n = first.vertex_count();
    if (n != second.vertex_count() || shoelace(first) != shoelace(second)) return std::nullopt;

    auto outgoing = [](const LatticePolygon& p, std::size_t i) {
        const auto& v = p.vertex(i);
        const auto& next = p.vertex(i + 1);
        const auto& prev = p.vertex(i + p.vertex_count() - 1);
        return std::tuple{primitive(next - v), primitive(prev - v), integral_length(v, next),
                          integral_length(v, prev)};
    };
    const auto [e_next, e_prev, len_next, len_prev] = outgoing(first, 0);
    const LatticePoint base = first.vertex(0);
    for (std::size_t j = 0; j < n; ++j) {
        const auto [f_next, f_prev, l_next, l_prev] = outgoing(second, j);
        const LatticePoint target = second.vertex(j);
        if (len_next == l_next && len_prev == l_prev) {
            if (auto m = frame_map(e_next, e_prev, f_next, f_prev, base, target);
                m && maps_onto(*m, first, second))
                return m;
        }
        if (len_next == l_prev && len_prev == l_next) {
            if (auto m = frame_map(e_next, e_prev, f_prev, f_next, base, target);
                m && maps_onto(*m, first, second))
                return m;
        }
    }
    return std::nullopt;
}

} // namespace latsize
