#include "latsize/newton.hpp"

#include "latsize/errors.hpp"
#include "latsize/interior.hpp"
#include "latsize/size.hpp"
#include "latsize/width.hpp"

#include <cctype>
#include <charconv>

namespace latsize {

void LaurentPolynomial::add_term(LatticePoint exponent, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

std::vector<LatticePoint> LaurentPolynomial::support() const {
    std::vector<LatticePoint> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    LaurentPolynomial parse() {
        LaurentPolynomial f;
        skip_space();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            advance();
        }
        term(f, sign);
        while (!at_end()) {
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            advance();
            term(f, c == '-' ? -1 : 1);
        }
        if (f.is_zero()) throw ZeroPolynomial();
        return f;
    }

  private:
    void term(LaurentPolynomial& f, int sign) {
        const std::size_t start = pos_;
        Rational coefficient = sign;
        bool has_coefficient = false;
        if (std::isdigit(peek()) || (peek() == '-' && std::isdigit(peek_next()))) {
            coefficient *= rational();
            has_coefficient = true;
            if (peek() == '*') {
                advance();
                if (peek() != 'x' && peek() != 'y') fail("expected 'x' or 'y' after '*'");
            }
        }
        LatticePoint exponent{0, 0};
        bool has_factor = false;
        while (peek() == 'x' || peek() == 'y') {
            factor(exponent);
            has_factor = true;
            if (peek() == '*') {
                advance();
                if (peek() != 'x' && peek() != 'y') fail("expected 'x' or 'y' after '*'");
            }
        }
        if (!has_coefficient && !has_factor) {
            pos_ = start;
            fail("expected a term");
        }
        f.add_term(exponent, coefficient);
    }

    void factor(LatticePoint& exponent) {
        const char variable = peek();
        advance();
        Int power = 1;
        if (peek() == '^') {
            advance();
            power = integer();
        }
        Int& slot = variable == 'x' ? exponent.x : exponent.y;
        slot = narrow(Wide(slot) + power, "exponent");
        check_guard(exponent);
    }

    Rational rational() {
        const std::size_t start = pos_;
        Rational value = Rational(big_integer());
        if (peek() == '/') {
            advance();
            boost::multiprecision::cpp_int den = big_integer();
            if (den == 0) {
                pos_ = start;
                fail("zero denominator");
            }
            value /= Rational(den);
        }
        return value;
    }

    boost::multiprecision::cpp_int big_integer() {
        std::string digits = signed_digits();
        return boost::multiprecision::cpp_int(digits);
    }

    Int integer() {
        const std::size_t start = pos_;
        std::string digits = signed_digits();
        Int value = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
            pos_ = start;
            fail("integer out of range");
        }
        return value;
    }

    std::string signed_digits() {
        std::string out;
        if (peek() == '-') {
            out.push_back('-');
            advance_raw();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected digits");
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out.push_back(text_[pos_++]);
        skip_space();
        return out;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    int peek() const { return at_end() ? -1 : static_cast<unsigned char>(text_[pos_]); }
    int peek_next() const {
        std::size_t p = pos_ + 1;
        while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
        return p < text_.size() ? static_cast<unsigned char>(text_[p]) : -1;
    }
    void advance() {
        ++pos_;
        skip_space();
    }
    // A '-' sign must be glued to its digits.
    void advance_raw() { ++pos_; }

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPolynomial parse_laurent(std::string_view text) { return Parser(text).parse(); }

LaurentPolynomial substitute(const LaurentPolynomial& f, const AffineUnimodularMap& phi) {
    LaurentPolynomial out;
    for (const auto& [e, c] : f.terms()) out.add_term(phi(e), c);
    return out;
}

LatticePolygon newton_polygon(const LaurentPolynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    const auto support = f.support();
    return hull(support);
}

NewtonAnalysis analyze(const LaurentPolynomial& f) {
    NewtonAnalysis out;
    out.polygon = newton_polygon(f);
    if (!out.polygon.is_two_dim())
        throw NotTwoDimensional("Newton polygon " + to_string(out.polygon) + " is not two-dimensional");
    out.interior = interior_hull(out.polygon);
    out.special = recognize_special(out.polygon);
    out.genus_bound = out.interior.empty() ? 0 : measures(out.interior).total_count;

    const bool upsilon_shape = out.special.kind == SpecialShape::Kind::Upsilon;
    const Int d = out.special.first;
    const Int inner_width = lattice_width(out.interior).width;
    const Int inner_square = lattice_size_square(out.interior).value;

    out.gonality = (upsilon_shape && d == 2) ? 3 : inner_width + 2;
    out.s2_bound = (upsilon_shape && d >= 2) ? 3 * d - 1 : lattice_size_sigma(out.interior).value + 3;
    out.s11_bound = (upsilon_shape && d == 2) ? std::pair<Int, Int>{3, 4}
                                              : std::pair<Int, Int>{inner_width + 2, inner_square + 2};

    out.caveats.push_back("upper bounds only: equality is expected for sufficiently generic coefficients");
    out.caveats.push_back("genus and gonality assume f is nondegenerate with respect to its Newton polygon");
    if (out.interior.empty())
        out.caveats.push_back("no interior lattice points: rational curve, gonality 1 by the empty-interior convention");
    if (upsilon_shape && d >= 2) out.caveats.push_back("Newton polygon is equivalent to " + std::to_string(d) +
                                                       "*Upsilon: sharpened bounds applied");
    return out;
}

} // namespace latsize
