#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace plateau {

// Expression templates are disabled so values behave like plain scalars
// (ternaries, std::min/max).
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

// Exact rational coordinate type. Always stored reduced with positive
// denominator (the rational adaptor maintains that invariant itself).
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Serializes as "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Parses "p", "p/q" or a decimal like "0.75". Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

std::optional<Rational> try_parse_rational(const std::string& text);

// Closed interval [lo, hi] with rational endpoints.
struct RatInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    // Interiors intersect (touching endpoints do not count).
    bool overlaps_interior(const RatInterval& o) const {
        return lo < o.hi && o.lo < hi;
    }
    bool operator==(const RatInterval& o) const { return lo == o.lo && hi == o.hi; }
};

// Axis-aligned rectangle [a_lo,a_hi] x [b_lo,b_hi] in hole-parameter space.
struct ParamRect {
    Rational a_lo, a_hi;
    Rational b_lo, b_hi;

    bool contains(const Rational& a, const Rational& b) const {
        return a_lo <= a && a <= a_hi && b_lo <= b && b <= b_hi;
    }
    bool contains(const ParamRect& o) const {
        return a_lo <= o.a_lo && o.a_hi <= a_hi && b_lo <= o.b_lo && o.b_hi <= b_hi;
    }
    bool overlaps_interior(const ParamRect& o) const {
        return a_lo < o.a_hi && o.a_lo < a_hi && b_lo < o.b_hi && o.b_lo < b_hi;
    }
    bool operator==(const ParamRect& o) const {
        return a_lo == o.a_lo && a_hi == o.a_hi && b_lo == o.b_lo && b_hi == o.b_hi;
    }
};

}  // namespace plateau
