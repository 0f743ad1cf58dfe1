#pragma once

#include "latsize/arith.hpp"

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace latsize {

struct LatticePoint {
    Int x = 0;
    Int y = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.x + q.x, p.y + q.y}; }
inline LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.x - q.x, p.y - q.y}; }
inline LatticePoint operator*(Int k, LatticePoint p) { return {k * p.x, k * p.y}; }

inline Wide dot(LatticePoint u, LatticePoint p) { return Wide(u.x) * p.x + Wide(u.y) * p.y; }
inline Wide cross(LatticePoint u, LatticePoint v) { return Wide(u.x) * v.y - Wide(u.y) * v.x; }
inline Wide norm2(LatticePoint u) { return dot(u, u); }

std::ostream& operator<<(std::ostream&, LatticePoint);

// Largest admissible |coordinate|. Defaults to 2^31; the environment variable
// LATSIZE_GUARD may lower it (read once per process).
Int coordinate_guard();
void check_guard(LatticePoint p);

// gcd(|q.x - p.x|, |q.y - p.y|); zero for coincident points.
Int integral_length(LatticePoint p, LatticePoint q);

enum class PolygonKind { Empty, Point, Segment, TwoDim };

std::string to_string(PolygonKind kind);

// Supporting line a*x + b*y <= c of an edge, with (a, b) the primitive outward normal.
struct EdgeLine {
    Int a = 0;
    Int b = 0;
    Wide c = 0;

    Wide eval(LatticePoint p) const { return Wide(a) * p.x + Wide(b) * p.y; }
};

// Convex hull of finitely many lattice points, possibly degenerate.
//
// Canonical form: a segment stores its two endpoints in lexicographic order;
// a two-dimensional polygon stores its vertices counterclockwise without
// collinear triples, starting at the lexicographically smallest vertex. Two
// polygons are equal as point sets iff they compare equal.
class LatticePolygon {
  public:
    LatticePolygon() = default;

    PolygonKind kind() const noexcept { return kind_; }
    bool empty() const noexcept { return kind_ == PolygonKind::Empty; }
    bool is_two_dim() const noexcept { return kind_ == PolygonKind::TwoDim; }
    bool is_degenerate() const noexcept { return kind_ != PolygonKind::TwoDim; }

    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    const LatticePoint& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    // Edges as (start, end) in counterclockwise order. A segment is its own
    // single edge; points and the empty polygon have none.
    std::vector<std::pair<LatticePoint, LatticePoint>> edges() const;
    // Supporting lines of the edges of a two-dimensional polygon, in edge order.
    std::vector<EdgeLine> edge_lines() const;

    bool contains(LatticePoint p) const;
    bool strictly_contains(LatticePoint p) const;
    // Every vertex of `other` lies in this polygon.
    bool contains(const LatticePolygon& other) const;

    // Integer bounds of a polygon that is non-empty.
    Int min_x() const;
    Int max_x() const;
    Int min_y() const;
    Int max_y() const;

    // Smallest and largest integer x with (x, y) strictly inside, if any.
    std::optional<std::pair<Int, Int>> interior_row(Int y) const;

    LatticePolygon translated(LatticePoint t) const;

    friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

  private:
    friend LatticePolygon hull(std::span<const LatticePoint>);
    LatticePolygon(PolygonKind kind, std::vector<LatticePoint> vertices)
        : kind_(kind), vertices_(std::move(vertices)) {}

    PolygonKind kind_ = PolygonKind::Empty;
    std::vector<LatticePoint> vertices_;
};

LatticePolygon hull(std::span<const LatticePoint> points);
inline LatticePolygon hull(std::initializer_list<LatticePoint> points) {
    return hull(std::span<const LatticePoint>(points.begin(), points.size()));
}

std::ostream& operator<<(std::ostream&, const LatticePolygon&);
// "Empty", "(x,y)", or "conv{(x,y),...}".
std::string to_string(const LatticePolygon&);

struct Measures {
    Int area2 = 0; // twice the Euclidean area
    Int boundary_count = 0;
    Int interior_count = 0;
    Int total_count = 0;

    friend bool operator==(const Measures&, const Measures&) = default;
};

// Exact lattice-point counts; throws PreconditionError on the empty polygon
// and InternalError if the direct interior count disagrees with Pick.
Measures measures(const LatticePolygon& polygon);

// Affine map p -> M p + t with integer M of determinant +-1.
class AffineUnimodularMap {
  public:
    AffineUnimodularMap() = default; // identity
    AffineUnimodularMap(Int m11, Int m12, Int m21, Int m22, Int t1 = 0, Int t2 = 0);

    static AffineUnimodularMap identity() { return {}; }
    static AffineUnimodularMap translation(LatticePoint t) { return {1, 0, 0, 1, t.x, t.y}; }
    // Rows are the linear forms giving the image coordinates.
    static AffineUnimodularMap from_rows(LatticePoint row1, LatticePoint row2, LatticePoint t = {});

    Int m11() const noexcept { return m11_; }
    Int m12() const noexcept { return m12_; }
    Int m21() const noexcept { return m21_; }
    Int m22() const noexcept { return m22_; }
    Int t1() const noexcept { return t1_; }
    Int t2() const noexcept { return t2_; }
    LatticePoint row1() const noexcept { return {m11_, m12_}; }
    LatticePoint row2() const noexcept { return {m21_, m22_}; }
    LatticePoint translation_part() const noexcept { return {t1_, t2_}; }
    Int determinant() const noexcept { return m11_ * m22_ - m12_ * m21_; }

    // Image of p; throws GuardError if it leaves the coordinate guard.
    LatticePoint operator()(LatticePoint p) const;
    LatticePoint linear(LatticePoint v) const;

    // (*this)(other(p)).
    AffineUnimodularMap after(const AffineUnimodularMap& other) const;
    AffineUnimodularMap inverse() const;

    friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

  private:
    Int m11_ = 1, m12_ = 0, m21_ = 0, m22_ = 1;
    Int t1_ = 0, t2_ = 0;
};

std::ostream& operator<<(std::ostream&, const AffineUnimodularMap&);

LatticePolygon apply_map(const AffineUnimodularMap& map, const LatticePolygon& polygon);

// Some phi with phi(first) == second, if the polygons are unimodularly equivalent.
std::optional<AffineUnimodularMap> are_equivalent(const LatticePolygon& first,
                                                  const LatticePolygon& second);

// Primitive vector parallel to v (v nonzero).
LatticePoint primitive(LatticePoint v);
// Some w with det(v, w) = 1 for primitive v.
LatticePoint complete_basis(LatticePoint v);
// Sign convention for directions: a > 0, or a == 0 and b > 0.
LatticePoint normalize_direction(LatticePoint v);

} // namespace latsize
