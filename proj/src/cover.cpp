#include "plateau/cover.hpp"

#include <stdexcept>

namespace plateau {

DoubleCover canonical_cover(MapClass cls, long lambda) {
    if (lambda < 2) throw std::invalid_argument("canonical_cover needs integer lambda >= 2");
    DoubleCover f;
    f.cls = cls;
    f.lambda = lambda;
    f.a_m = 0;
    f.a_M = Rational(1, lambda);
    f.b_M = Rational(lambda - 1, lambda);
    f.b_m = 1;
    f.c = Rational(1, 2);
    bool left_inc = parity(cls, 0) > 0;
    bool right_inc = parity(cls, 1) > 0;
    f.left = left_inc ? AffineBranch{lambda, 0} : AffineBranch{-lambda, 1};
    f.right = right_inc ? AffineBranch{lambda, Rational(1 - lambda)} : AffineBranch{-lambda, lambda};
    return f;
}

PlateauConfig make_plateau(const DoubleCover& cover, const Rational& a, const Rational& b) {
    if (a < cover.a_m || a > cover.a_M) throw std::invalid_argument("a outside [a_m, a_M]");
    if (b < cover.b_M || b > cover.b_m) throw std::invalid_argument("b outside [b_M, b_m]");
    PlateauConfig cfg;
    cfg.cover = cover;
    cfg.a = a;
    cfg.b = b;
    cfg.plateau_left = cover.left(a);
    cfg.plateau_right = cover.right(b);
    return cfg;
}

Rational evaluate(const PlateauConfig& cfg, const Rational& x, Side side) {
    const auto& f = cfg.cover;
    if (x < f.a_m || x > f.b_m) throw std::invalid_argument("point outside [a_m, b_m]");
    const Rational& c = f.c;
    if (x < cfg.a) return f.left(x);
    if (x == cfg.a && x < c) return f.left(x);
    if (x > cfg.b) return f.right(x);
    if (x == cfg.b && x > c) return f.right(x);
    if (x == c) {
        if (side == Side::minus) return cfg.a < c ? cfg.plateau_left : f.left(c);
        return c < cfg.b ? cfg.plateau_right : f.right(c);
    }
    return x < c ? cfg.plateau_left : cfg.plateau_right;
}

Rational step_exact(const PlateauConfig& cfg, const Rational& x) {
    const auto& f = cfg.cover;
    const Rational& c = f.c;
    if (x <= cfg.a) return f.left(x);
    if (x >= cfg.b) return f.right(x);
    if (x == c) {
        if (cfg.b == c && cfg.a < c) return f.right(c);
        return cfg.a < c ? cfg.plateau_left : f.left(c);
    }
    return x < c ? cfg.plateau_left : cfg.plateau_right;
}

Word itinerary(const PlateauConfig& cfg, const Rational& x, Side side, size_t n) {
    const auto& f = cfg.cover;
    if (x < f.a_m || x > f.b_m) throw std::invalid_argument("point outside [a_m, b_m]");
    const Rational& c = f.c;

    Rational cur = x;
    int dir = side == Side::plus ? 1 : -1;  // side the nearby orbit sits on
    bool exact = false;                     // true once nearby orbits coincide

    Word out;
    out.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        int addr;
        if (cur < c) addr = 0;
        else if (cur > c) addr = 1;
        else if (exact) addr = (cfg.b == c && cfg.a < c) ? 1 : 0;
        else addr = dir < 0 ? 0 : 1;
        out.push_back(char('0' + addr));

        if (addr == 0) {
            if (cur < cfg.a || (cur == cfg.a && (exact || dir < 0))) {
                cur = f.left(cur);
                dir *= parity(f.cls, 0);
            } else if (cur < c) {  // in [a, c): plateau (or a approached from above)
                cur = cfg.plateau_left;
                exact = true;
            } else {  // cur == c resolved to the left
                if (cfg.a < c) {
                    cur = cfg.plateau_left;
                    exact = true;
                } else {
                    cur = f.left(c);
                    dir *= parity(f.cls, 0);
                }
            }
        } else {
            if (cur > cfg.b || (cur == cfg.b && (exact || dir > 0))) {
                cur = f.right(cur);
                dir *= parity(f.cls, 1);
            } else if (cur > c) {
                cur = cfg.plateau_right;
                exact = true;
            } else {  // cur == c resolved to the right
                if (c < cfg.b) {
                    cur = cfg.plateau_right;
                    exact = true;
                } else {
                    cur = f.right(c);
                    dir *= parity(f.cls, 1);
                }
            }
        }
    }
    return out;
}

KneadingPrefix kneading_invariant(const PlateauConfig& cfg, size_t n) {
    return {itinerary(cfg, cfg.c(), Side::minus, n), itinerary(cfg, cfg.c(), Side::plus, n)};
}

Rational address(const DoubleCover& cover, const SymbolSequence& s) {
    if (s.is_finite()) throw std::invalid_argument("address needs an eventually periodic sequence");
    const Word& per = s.period();
    // affine composite of the periodic tail
    BigInt slope = 1;
    Rational shiftv = 0;
    for (char ch : per) {
        const AffineBranch& br = ch == '0' ? cover.left : cover.right;
        slope = br.slope * slope;
        shiftv = Rational(br.slope) * shiftv + br.shift;
    }
    Rational x = shiftv / (Rational(1) - Rational(slope));
    const Word& pre = s.preperiod();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it)
        x = cover.branch_pullback(*it - '0', x);
    return x;
}

RatInterval address_cylinder(const DoubleCover& cover, const Word& w) {
    RatInterval iv{cover.a_m, cover.b_m};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Rational u = cover.branch_pullback(*it - '0', iv.lo);
        Rational v = cover.branch_pullback(*it - '0', iv.hi);
        if (u <= v) iv = {u, v};
        else iv = {v, u};
    }
    return iv;
}

Rational right_fixed_point(const DoubleCover& cover) {
    return cover.right.shift / (Rational(1) - Rational(cover.right.slope));
}

std::pair<Rational, Rational> parse_param_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected 'a=p/q,b=r/s'");
    auto grab = [](const std::string& part, char name) {
        if (part.size() < 3 || part[0] != name || part[1] != '=')
            throw std::invalid_argument(std::string("expected '") + name + "=...'");
        return parse_rational(part.substr(2));
    };
    return {grab(text.substr(0, comma), 'a'), grab(text.substr(comma + 1), 'b')};
}

}  // namespace plateau
