#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"
#include "fixtures.hpp"

#include "latsize/errors.hpp"
#include "latsize/oracle.hpp"
#include "latsize/shapes.hpp"
#include "latsize/size.hpp"
#include "latsize/width.hpp"

#include <set>

using namespace latsize;

namespace {

using Pairs = std::vector<std::pair<Int, Int>>;

} // namespace

TEST_CASE("oracle sizes") {
    CHECK(oracle_size(fixtures::heptagon(), TargetShape::Kind::Sigma) == 10);
    CHECK(oracle_size(fixtures::heptagon(), TargetShape::Kind::Square) == 8);
    CHECK(oracle_size(hull({{3, -1}}), TargetShape::Kind::Sigma) == 0);
    CHECK(oracle_size(hull({{0, 0}, {2, 4}}), TargetShape::Kind::Sigma) == 2);
    CHECK_THROWS_AS(oracle_size(LatticePolygon{}, TargetShape::Kind::Sigma), PreconditionError);
}

TEST_CASE("oracle agrees with the recursion on random polygons") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto p = random_polygon(seed, 4);
        CHECK(oracle_size(p, TargetShape::Kind::Sigma) == lattice_size_sigma(p).value);
        CHECK(oracle_size(p, TargetShape::Kind::Square) == lattice_size_square(p).value);
    }
}

TEST_CASE("Pareto sets") {
    CHECK(oracle_box_pareto(rectangle(2, 3), 6).pairs == Pairs{{2, 3}});
    CHECK(oracle_box_pareto(hull({{0, 0}, {5, 0}, {0, 2}}), 7).pairs == Pairs{{2, 5}});
    CHECK(oracle_box_pareto(standard_triangle(2), 4).pairs == Pairs{{2, 2}});
    CHECK(oracle_box_pareto(fixtures::heptagon(), 10).pairs == Pairs{{5, 8}});
    // A limit below the square size leaves nothing feasible.
    CHECK(oracle_box_pareto(rectangle(2, 3), 2).pairs.empty());
}

TEST_CASE("random polygons") {
    CHECK(random_polygon(1, 4) == random_polygon(1, 4));
    const auto p = random_polygon(2, 4);
    CHECK(p.is_two_dim());
    for (auto v : p.vertices()) {
        CHECK(v.x >= 0);
        CHECK(v.x <= 4);
        CHECK(v.y >= 0);
        CHECK(v.y <= 4);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto q = random_polygon(seed, 3);
        const auto m = measures(q);
        CHECK(m.area2 == 2 * m.interior_count + m.boundary_count - 2);
        CHECK(m.area2 == brute::shoelace2(q.vertices()));
    }
    CHECK_THROWS_AS(random_polygon(1, 0), PreconditionError);
}

TEST_CASE("census") {
    // Four unit triangles and the unit square.
    CHECK(census(1).size() == 5);
    const auto two = census(2);
    std::set<LatticePolygon, bool (*)(const LatticePolygon&, const LatticePolygon&)> unique(
        [](const LatticePolygon& a, const LatticePolygon& b) { return a.vertices() < b.vertices(); });
    for (const auto& p : two) {
        CHECK(p.is_two_dim());
        unique.insert(p);
    }
    CHECK(unique.size() == two.size());
    CHECK_THROWS_AS(census(4), PreconditionError);
}

TEST_CASE("census 2 against brute force") {
    for (const auto& p : census(2)) {
        const auto s = lattice_size_sigma(p).value;
        const auto q = lattice_size_square(p).value;
        CHECK(s == brute::size(p.vertices(), true, 3));
        CHECK(q == brute::size(p.vertices(), false, 3));
        CHECK(lattice_width(p).width == brute::width(p.vertices()));
        CHECK(oracle_box_pareto(p, q + 2).pairs == Pairs{{lattice_width(p).width, q}});
    }
}
