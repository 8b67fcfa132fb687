#pragma once

#include "plateau/rational.hpp"
#include "plateau/words.hpp"

#include <utility>

namespace plateau {

enum class Side : uint8_t { minus, plus };

// Affine branch y = slope*x + shift with integer |slope| = lambda.
struct AffineBranch {
    BigInt slope;
    Rational shift;

    Rational operator()(const Rational& x) const { return Rational(slope) * x + shift; }
    Rational inverse(const Rational& y) const { return (y - shift) / Rational(slope); }
    bool increasing() const { return slope > 0; }
};

// Canonical expanding double cover on [0,1]: both affine branches map their
// domain pieces onto [0,1] with |slope| = lambda and the boundary conditions
// of the class. Domain pieces are [0, 1/lambda] and [1-1/lambda, 1]; the
// plateau split point c is 1/2 (equal to both break points when lambda = 2).
struct DoubleCover {
    MapClass cls;
    long lambda;
    Rational a_m, a_M, b_M, b_m;
    Rational c;
    AffineBranch left, right;

    Rational branch_value(int symbol, const Rational& x) const {
        return symbol == 0 ? left(x) : right(x);
    }
    Rational branch_pullback(int symbol, const Rational& y) const {
        return symbol == 0 ? left.inverse(y) : right.inverse(y);
    }
};

DoubleCover canonical_cover(MapClass cls, long lambda = 2);

// Plateau map F_{a,b} over a cover: branches outside [a,b], the constant
// value f(a-) on (a,c) and f(b+) on (c,b). Also serves as the open map
// f_{a,b} when the plateau values are ignored.
struct PlateauConfig {
    DoubleCover cover;
    Rational a, b;
    Rational plateau_left;   // f(a-), value on (a,c)
    Rational plateau_right;  // f(b+), value on (c,b)

    const Rational& c() const { return cover.c; }
    bool in_hole(const Rational& x) const { return a < x && x < b; }
};

PlateauConfig make_plateau(const DoubleCover& cover, const Rational& a, const Rational& b);

// One-sided value of F_{a,b} at x; the side resolves the jump at c (and is
// irrelevant elsewhere).
Rational evaluate(const PlateauConfig& cfg, const Rational& x, Side side);

// Single-valued orbit map used for exact orbits: at x = c it follows the
// convention F(c) = F(c-) except when b = c, where c belongs to the right
// branch (f_{a,b}(b) = f(b+)).
Rational step_exact(const PlateauConfig& cfg, const Rational& x);

// First n addresses of the one-sided orbit of x. The side tag selects the
// limit k(x_side); landing exactly on c mid-orbit resolves through the
// accumulated branch orientation, or through the plateau once the orbit has
// entered one (nearby orbits then coincide exactly).
Word itinerary(const PlateauConfig& cfg, const Rational& x, Side side, size_t n);

// (k(c-), k(c+)) truncated to n symbols each.
struct KneadingPrefix {
    Word k_minus;
    Word k_plus;
};
KneadingPrefix kneading_invariant(const PlateauConfig& cfg, size_t n);

// Exact address alpha(s) of an eventually periodic sequence: solve the
// affine fixed-point equation of the periodic tail, pull back through the
// preperiod. The result is the unique x with k(x_p) = s for a side p.
Rational address(const DoubleCover& cover, const SymbolSequence& s);

// Exact interval of points whose cover itinerary starts with w
// (width (b_m-a_m) * lambda^-|w|); brackets alpha of any extension of w.
RatInterval address_cylinder(const DoubleCover& cover, const Word& w);

// Fixed point of the right branch (classes B,C: interior; A,D: b_m).
Rational right_fixed_point(const DoubleCover& cover);

// Parses "a=p/q,b=r/s".
std::pair<Rational, Rational> parse_param_pair(const std::string& text);

}  // namespace plateau
