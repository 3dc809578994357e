#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace torusmaps {

using Int = long long;
using Rat = boost::rational<Int>;

// floor division, works for negative a (b must be nonzero)
inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int mod_floor(Int a, Int b) { return a - floor_div(a, b) * b; }

// floor of a rational (boost keeps denominator > 0)
inline Int rfloor(const Rat& r) { return floor_div(r.numerator(), r.denominator()); }

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

// sign of a rational: -1, 0, or +1 (denominator is always positive)
inline int rsign(const Rat& r) {
    Int n = r.numerator();
    return (n > 0) - (n < 0);
}

// Mixed equality between boost::rational and an integer recurses forever under
// C++20: the reversed-candidate rewrite selects boost's own operator==(Arg,
// rational) helper, whose body re-enters itself.  Blocked here so the mistake
// is a compile error instead of a stack overflow; compare against Rat(n) or
// use rsign instead.  Ordering comparisons (<, >, <=, >=) are unaffected.
bool operator==(const Rat&, int) = delete;
bool operator==(int, const Rat&) = delete;
bool operator==(const Rat&, Int) = delete;
bool operator==(Int, const Rat&) = delete;

inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace torusmaps
