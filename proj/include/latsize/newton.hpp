#pragma once

#include "latsize/polygon.hpp"
#include "latsize/shapes.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace latsize {

using Rational = boost::multiprecision::cpp_rational;

// Finite sum of c * x^i * y^j over (i, j) in Z^2 with nonzero rational c.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;

    // Adds c * x^i y^j, combining like terms and dropping zero coefficients.
    void add_term(LatticePoint exponent, const Rational& coefficient);

    const std::map<LatticePoint, Rational>& terms() const noexcept { return terms_; }
    std::vector<LatticePoint> support() const;
    bool is_zero() const noexcept { return terms_.empty(); }

  private:
    std::map<LatticePoint, Rational> terms_;
};

// Grammar (whitespace-insensitive):
//   polynomial  := ['+'|'-'] term (('+'|'-') term)*
//   term        := [coefficient ['*']] factor ('*'? factor)*  |  coefficient
//   factor      := ('x'|'y') ['^' integer]
//   coefficient := integer ['/' integer]
//   integer     := ['-'] digits
// Throws SyntaxError (with position) or ZeroPolynomial.
LaurentPolynomial parse_laurent(std::string_view text);

// The monomial substitution f^phi: each exponent e moves to phi(e).
LaurentPolynomial substitute(const LaurentPolynomial& f, const AffineUnimodularMap& phi);

LatticePolygon newton_polygon(const LaurentPolynomial& f);

struct NewtonAnalysis {
    LatticePolygon polygon;
    LatticePolygon interior;
    Int genus_bound = 0;
    Int gonality = 0;
    Int s2_bound = 0;
    std::pair<Int, Int> s11_bound;
    SpecialShape special;
    std::vector<std::string> caveats;
};

// Genus, gonality and the plane / bidegree model bounds read off the Newton
// polygon. Throws NotTwoDimensional unless the Newton polygon is two-dimensional.
NewtonAnalysis analyze(const LaurentPolynomial& f);

} // namespace latsize
