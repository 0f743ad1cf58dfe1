#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "fixtures.hpp"

#include "latsize/errors.hpp"
#include "latsize/oracle.hpp"
#include "latsize/shapes.hpp"

#include <random>

using namespace latsize;

namespace {

using Shape = SpecialShape;

std::vector<LatticePoint> all_points(const LatticePolygon& p) {
    std::vector<LatticePoint> out;
    for (Int x = p.min_x(); x <= p.max_x(); ++x)
        for (Int y = p.min_y(); y <= p.max_y(); ++y)
            if (p.contains(LatticePoint{x, y})) out.push_back({x, y});
    return out;
}

} // namespace

TEST_CASE("hull canonical form") {
    const auto square = hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}});
    CHECK(square.kind() == PolygonKind::TwoDim);
    CHECK(square.vertices() == std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

    const auto seg = hull({{0, 0}, {1, 0}, {3, 0}});
    CHECK(seg.kind() == PolygonKind::Segment);
    CHECK(seg.vertices() == std::vector<LatticePoint>{{0, 0}, {3, 0}});

    CHECK(hull({}).empty());
    CHECK(hull({{2, 5}, {2, 5}}).kind() == PolygonKind::Point);
    CHECK(to_string(hull({{2, 5}})) == "(2,5)");
    CHECK(to_string(hull({})) == "Empty");
}

TEST_CASE("hull of the heptagon's lattice points is the heptagon") {
    const auto h = fixtures::heptagon();
    const auto points = all_points(h);
    CHECK(hull(points) == h);

    const auto extreme = brute::extreme_points(points);
    const std::set<LatticePoint> vertices(h.vertices().begin(), h.vertices().end());
    CHECK(extreme == vertices);
    CHECK(h.vertex_count() == 7);
    CHECK(h.vertex(0) == LatticePoint{0, 6});
}

TEST_CASE("measures") {
    const auto m3 = measures(standard_triangle(3));
    CHECK(m3 == Measures{9, 9, 1, 10});
    const auto mu = measures(upsilon(1));
    CHECK(mu == Measures{3, 3, 1, 4});
    CHECK(measures(rectangle(2, 3)) == Measures{12, 10, 2, 12});

    const auto c3 = brute::count_points(standard_triangle(3).vertices());
    CHECK(c3.interior == 1);
    CHECK(c3.boundary + c3.interior == 10);
    const auto cu = brute::count_points(upsilon(1).vertices());
    CHECK(cu.interior + cu.boundary == 4);

    CHECK(measures(hull({{1, 1}})) == Measures{0, 1, 0, 1});
    CHECK(measures(hull({{0, 0}, {6, 4}})) == Measures{0, 3, 0, 3});
    CHECK_THROWS_AS(measures(LatticePolygon{}), PreconditionError);
}

TEST_CASE("integral length") {
    CHECK(integral_length({0, 0}, {6, 4}) == 2);
    CHECK(integral_length({0, 0}, {7, 0}) == 7);
    CHECK(integral_length({1, 1}, {1, 1}) == 0);
    CHECK(integral_length({3, -2}, {-3, 7}) == 3);
}

TEST_CASE("apply_map") {
    const auto h = fixtures::heptagon();
    CHECK(apply_map(AffineUnimodularMap::identity(), h) == h);

    const AffineUnimodularMap shear(1, 1, 0, 1);
    CHECK(apply_map(shear, standard_triangle(2)) == hull({{0, 0}, {2, 0}, {2, 2}}));

    const AffineUnimodularMap swap(0, 1, 1, 0);
    CHECK(apply_map(swap, rectangle(2, 5)) == rectangle(5, 2));

    CHECK_THROWS_AS(AffineUnimodularMap(2, 0, 0, 1), PreconditionError);
    CHECK_THROWS_AS(AffineUnimodularMap(1, 1, 1, 1), PreconditionError);
}

TEST_CASE("map group laws") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const auto f = random_unimodular_map(rng, 6, 10);
        const auto g = random_unimodular_map(rng, 6, 10);
        const LatticePoint p{static_cast<Int>(i) - 100, 3 * i % 17};
        CHECK(f.after(g)(p) == f(g(p)));
        CHECK(f.inverse()(f(p)) == p);
        CHECK(f.after(f.inverse()) == AffineUnimodularMap::identity());
        CHECK((f.determinant() == 1 || f.determinant() == -1));
    }
}

TEST_CASE("coordinate guard") {
    const Int big = coordinate_guard();
    CHECK_NOTHROW(hull({{big, 0}, {0, 0}, {0, 1}}));
    CHECK_THROWS_AS(hull({{big + 1, 0}}), GuardError);
    const AffineUnimodularMap shift = AffineUnimodularMap::translation({1, 0});
    CHECK_THROWS_AS(shift(LatticePoint{big, 0}), GuardError);
}

TEST_CASE("are_equivalent examples") {
    const auto sheared = hull({{0, 0}, {2, 0}, {2, 2}});
    const auto phi = are_equivalent(standard_triangle(2), sheared);
    REQUIRE(phi);
    CHECK(apply_map(*phi, standard_triangle(2)) == sheared);

    CHECK_FALSE(are_equivalent(standard_triangle(1), rectangle(1, 1)));

    const auto left = hull({{0, 0}, {5, 0}, {0, 2}});
    const auto right = hull({{0, 0}, {5, 0}, {5, 2}});
    const auto psi = are_equivalent(left, right);
    REQUIRE(psi);
    CHECK(apply_map(*psi, left) == right);

    // Same area and edge lengths, different shapes.
    CHECK_FALSE(are_equivalent(lawrence_prism(3, 1), lawrence_prism(2, 2)));

    // Degenerate kinds.
    CHECK(are_equivalent(hull({{0, 0}, {3, 3}}), hull({{1, 0}, {1, 3}})));
    CHECK_FALSE(are_equivalent(hull({{0, 0}, {3, 3}}), hull({{0, 0}, {2, 0}})));
    CHECK(are_equivalent(hull({{4, 4}}), hull({{-1, 2}})));
    CHECK(are_equivalent(LatticePolygon{}, LatticePolygon{}));
    CHECK_FALSE(are_equivalent(hull({{4, 4}}), LatticePolygon{}));
}

TEST_CASE("recognize_special examples") {
    CHECK(recognize_special(hull({{0, 0}, {4, 0}, {0, 4}})) == Shape::standard_triangle(4));
    CHECK(recognize_special(hull({{-2, -2}, {2, 0}, {0, 2}})) == Shape::upsilon(2));
    CHECK(recognize_special(hull({{0, 0}, {1, 2}, {3, 3}, {2, 1}})) == Shape::none());
    CHECK(recognize_special(rectangle(5, 2)) == Shape::rectangle(2, 5));
    CHECK(recognize_special(lawrence_prism(4, 2)) == Shape::lawrence_prism(4, 2));
    CHECK(recognize_special(lawrence_prism(0, 3)) == Shape::lawrence_prism(3, 0));
    CHECK(to_string(Shape::lawrence_prism(4, 2)) == "LawrencePrism(4,2)");
    CHECK_THROWS_AS(recognize_special(hull({{0, 0}, {1, 1}})), PreconditionError);
}

TEST_CASE("Pick identity on random polygons") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto p = random_polygon(seed, 6);
        const auto m = measures(p);
        CHECK(m.area2 == 2 * m.interior_count + m.boundary_count - 2);
        CHECK(m.total_count == m.interior_count + m.boundary_count);
        CHECK(m.area2 == brute::shoelace2(p.vertices()));
        const auto c = brute::count_points(p.vertices());
        CHECK(c.interior == m.interior_count);
        CHECK(c.boundary == m.boundary_count);
    }
}

TEST_CASE("random maps preserve measures and equivalence") {
    std::mt19937_64 rng(2024);
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const auto p = random_polygon(i, 5);
        const auto phi = random_unimodular_map(rng, 8, 20);
        const auto q = apply_map(phi, p);
        CHECK(measures(q) == measures(p));
        const auto psi = are_equivalent(p, q);
        REQUIRE(psi);
        CHECK(apply_map(*psi, p) == q);
        CHECK(apply_map(psi->inverse(), q) == p);
        CHECK(are_equivalent(p, p));
    }
}

TEST_CASE("recognition is stable under random maps") {
    std::mt19937_64 rng(99);
    for (Int d = 1; d <= 8; ++d)
        for (int i = 0; i < 50; ++i)
            CHECK(recognize_special(apply_map(random_unimodular_map(rng, 6, 9), standard_triangle(d))) ==
                  Shape::standard_triangle(d));
    for (Int d = 1; d <= 4; ++d)
        for (int i = 0; i < 50; ++i)
            CHECK(recognize_special(apply_map(random_unimodular_map(rng, 6, 9), upsilon(d))) == Shape::upsilon(d));
    for (Int a = 1; a <= 4; ++a)
        for (Int b = a; b <= 5; ++b)
            for (int i = 0; i < 20; ++i)
                CHECK(recognize_special(apply_map(random_unimodular_map(rng, 6, 9), rectangle(b, a))) ==
                      Shape::rectangle(a, b));
    // Prisms with a == b are rectangles.
    for (Int a = 2; a <= 6; ++a)
        for (Int b = 0; b <= a; ++b) {
            if (b == a) continue;
            for (int i = 0; i < 20; ++i)
                CHECK(recognize_special(apply_map(random_unimodular_map(rng, 6, 9), lawrence_prism(a, b))) ==
                      Shape::lawrence_prism(a, b));
        }
}
