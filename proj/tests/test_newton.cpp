#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brute.hpp"

#include "latsize/errors.hpp"
#include "latsize/newton.hpp"
#include "latsize/oracle.hpp"
#include "latsize/shapes.hpp"

#include <random>
#include <set>

using namespace latsize;

namespace {

std::set<LatticePoint> support_set(const LaurentPolynomial& f) {
    const auto s = f.support();
    return {s.begin(), s.end()};
}

std::string weierstrass_poly(Int g) { return "y^2 + x^" + std::to_string(2 * g + 1) + " + 1"; }

} // namespace

TEST_CASE("parse Laurent polynomials") {
    CHECK(support_set(parse_laurent("y^2 + x^5 + 1")) == std::set<LatticePoint>{{0, 2}, {5, 0}, {0, 0}});
    CHECK(support_set(parse_laurent("3*x^-2*y^5 - x*y + 7")) == std::set<LatticePoint>{{-2, 5}, {1, 1}, {0, 0}});
    CHECK(support_set(parse_laurent("-x y^3 + 2/3 x^2")) == std::set<LatticePoint>{{1, 3}, {2, 0}});
    CHECK(support_set(parse_laurent("x*x*y - x^2 y + y")) == std::set<LatticePoint>{{0, 1}});
    CHECK(support_set(parse_laurent("  x^-1  ")) == std::set<LatticePoint>{{-1, 0}});

    const auto f = parse_laurent("1/2 x + 1/2 x - 3");
    CHECK(f.terms().at({1, 0}) == 1);
    CHECK(f.terms().at({0, 0}) == -3);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_laurent("x - x"), ZeroPolynomial);
    CHECK_THROWS_AS(parse_laurent("0"), ZeroPolynomial);
    CHECK_THROWS_AS(parse_laurent(""), SyntaxError);
    CHECK_THROWS_AS(parse_laurent("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_laurent("x^"), SyntaxError);
    CHECK_THROWS_AS(parse_laurent("z + 1"), SyntaxError);
    CHECK_THROWS_AS(parse_laurent("1/0 x"), SyntaxError);
    CHECK_THROWS_AS(parse_laurent("3* + x"), SyntaxError);
    CHECK_THROWS_AS(parse_laurent("x^99999999999999999999"), SyntaxError);
    try {
        parse_laurent("x + y ^ 2 + ?");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 12);
    }
}

TEST_CASE("Newton polygons") {
    CHECK(newton_polygon(parse_laurent("y^2 + x^5 + 1")) == hull({{0, 0}, {5, 0}, {0, 2}}));
    CHECK(newton_polygon(parse_laurent("x^-2*y^-2 + x^2 + y^2 + 1")) == upsilon(2));
    CHECK(newton_polygon(parse_laurent("x^3")) == hull({{3, 0}}));
    CHECK_THROWS_AS(newton_polygon(LaurentPolynomial{}), ZeroPolynomial);
}

TEST_CASE("analysis examples") {
    const auto w = analyze(parse_laurent("y^2 + x^7 + 1"));
    CHECK(w.genus_bound == 3);
    CHECK(w.gonality == 2);
    CHECK(w.s2_bound == 5);
    CHECK(w.s11_bound == std::pair<Int, Int>{2, 4});

    const auto u = analyze(parse_laurent("x^-2*y^-2 + x^2 + y^2 + 1"));
    CHECK(u.special == SpecialShape::upsilon(2));
    CHECK(u.genus_bound == 4);
    CHECK(u.gonality == 3);
    CHECK(u.s2_bound == 5);
    CHECK(u.s11_bound == std::pair<Int, Int>{3, 4});

    const auto t = analyze(parse_laurent("x^5 + y^5 + 1"));
    CHECK(t.genus_bound == 6);
    CHECK(Int(brute::interior_points(standard_triangle(5).vertices()).size()) == 6);
    CHECK(t.gonality == 4);
    CHECK(t.s2_bound == 5);
    CHECK(t.s11_bound == std::pair<Int, Int>{4, 4});

    const auto u3 = analyze(parse_laurent("x^-3*y^-3 + x^3 + y^3"));
    CHECK(u3.s2_bound == 8);

    const auto rational = analyze(parse_laurent("1 + x + y"));
    CHECK(rational.genus_bound == 0);
    CHECK(rational.gonality == 1);
    CHECK(rational.s2_bound == 1);
    CHECK(rational.s11_bound == std::pair<Int, Int>{1, 1});
    CHECK(rational.caveats.size() == 3);

    CHECK_THROWS_AS(analyze(parse_laurent("x^2 + 1")), NotTwoDimensional);
    CHECK_THROWS_AS(analyze(parse_laurent("x y")), NotTwoDimensional);
}

TEST_CASE("hyperelliptic family") {
    for (Int g = 2; g <= 10; ++g) {
        const auto a = analyze(parse_laurent(weierstrass_poly(g)));
        CHECK(a.genus_bound == g);
        CHECK(a.gonality == 2);
        CHECK(a.s2_bound == g + 2);
        CHECK(a.s11_bound == std::pair<Int, Int>{2, g + 1});
    }
}

TEST_CASE("analysis is invariant under monomial substitution") {
    const std::vector<std::string> polys{"y^2 + x^7 + 1", "x^-2*y^-2 + x^2 + y^2 + 1", "x^5 + y^5 + 1",
                                         "x^4 y + x y^3 + 2 x^2 y^2 + 1 + x^3", "1 + x + y + x^2 y^3"};
    std::mt19937_64 rng(17);
    for (const auto& text : polys) {
        const auto f = parse_laurent(text);
        const auto base = analyze(f);
        CHECK(base.s11_bound.first <= base.s11_bound.second);
        CHECK(base.s11_bound <= std::pair<Int, Int>{base.s2_bound, base.s2_bound});
        if (!base.interior.empty()) {
            const auto m = measures(base.polygon);
            // Interior count from Pick, independent of enumeration.
            CHECK(base.genus_bound == (m.area2 - m.boundary_count + 2) / 2);
        }
        for (int i = 0; i < 50; ++i) {
            const auto phi = random_unimodular_map(rng, 4, 6);
            const auto a = analyze(substitute(f, phi));
            CHECK(a.polygon == apply_map(phi, base.polygon));
            CHECK(a.genus_bound == base.genus_bound);
            CHECK(a.gonality == base.gonality);
            CHECK(a.s2_bound == base.s2_bound);
            CHECK(a.s11_bound == base.s11_bound);
            CHECK(a.special == base.special);
            CHECK(a.caveats == base.caveats);
        }
    }
}
