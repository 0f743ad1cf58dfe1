#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>

namespace latsize {

using Int = std::int64_t;
// Wide enough for every determinant and shoelace sum of guarded coordinates.
using Wide = __int128;

constexpr Int abs_int(Int v) { return v < 0 ? -v : v; }
constexpr Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

constexpr Int gcd_int(Int a, Int b) { return std::gcd(a, b); }

// Floor and ceiling of n / d for d != 0, exact on negative operands.
constexpr Wide floor_div(Wide n, Wide d) {
    Wide q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}
constexpr Wide ceil_div(Wide n, Wide d) {
    Wide q = n / d;
    if ((n % d != 0) && ((n < 0) == (d < 0))) ++q;
    return q;
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
constexpr std::tuple<Int, Int, Int> ext_gcd(Int a, Int b) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
        std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
        std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

// Narrowing with a range check; throws GuardError on overflow.
Int narrow(Wide v, const char* context);

std::string to_string(Wide v);

} // namespace latsize
