#include "plateau/boxes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace plateau {

namespace {

SymbolSequence seq(Word pre, Word per) { return SymbolSequence(std::move(pre), std::move(per)); }

// Boundary itineraries of the induced cover, by class of the induced map.
// Rows: a_lo = a~_m, a_hi = a~_M, b_lo = b~_M, b_hi = b~_m.
struct CornerSequences {
    SymbolSequence a_lo, a_hi, b_lo, b_hi;
};

CornerSequences corner_sequences(MapClass cls, const Word& wm, const Word& wp) {
    switch (cls) {
        case MapClass::A:
            return {seq({}, wm), seq(wm, wp), seq(wp, wm), seq({}, wp)};
        case MapClass::B:
            return {seq({}, wm), seq(wm + wp, wm), seq(wp + wp, wm), seq(wp, wm)};
        case MapClass::C:
            return {seq({}, wm + wp), seq(wm, wm + wp), seq(wp, wp + wm), seq({}, wp + wm)};
        case MapClass::D:
            return {seq(wm, wp), seq(wm + wm, wp), seq(wp + wm, wp), seq({}, wp)};
    }
    throw std::logic_error("unreachable");
}

int orientation(const DoubleCover& cover, const Word& w) {
    int p = 1;
    for (char ch : w) p *= parity(cover.cls, ch - '0');
    return p;
}

// Return-map conditions of the induced pair (F^n, F^m) on [a_g, b_g] at one
// parameter point, sampled on a grid of phase points per side.
void validate_at(const DoubleCover& cover, const ParamRect& rect, size_t n, size_t m,
                 const Rational& a, const Rational& b, const std::string& what) {
    PlateauConfig cfg = make_plateau(cover, a, b);
    const Rational a_g = rect.a_lo, b_g = rect.b_hi;
    auto inside = [&](const Rational& x) { return a_g <= x && x <= b_g; };
    auto fail = [&](const std::string& msg) {
        throw OracleError("box oracle: " + msg + " [" + what + "]");
    };

    auto run_side = [&](const Rational& lo, const Rational& hi, size_t iters, bool left_side) {
        std::vector<Rational> samples;
        for (int k = 1; k <= 3; ++k) samples.push_back(lo + (hi - lo) * k / 4);
        samples.push_back(left_side ? std::min(a, hi) : std::max(b, lo));
        for (const Rational& x0 : samples) {
            if (!(lo < x0 && x0 < hi)) continue;
            Rational x = x0;
            for (size_t k = 1; k < iters; ++k) {
                x = step_exact(cfg, x);
                if (inside(x)) fail("intermediate iterate re-enters the induced interval");
            }
            x = step_exact(cfg, x);
            if (!inside(x)) fail("return iterate leaves the induced interval");
        }
    };
    run_side(a_g, cfg.c(), n, true);
    run_side(cfg.c(), b_g, m, false);

    // endpoint returns stay in the interval
    Rational x = a_g;
    for (size_t k = 0; k < n; ++k) x = step_exact(cfg, x);
    if (!inside(x)) fail("left endpoint return escapes");
    x = b_g;
    for (size_t k = 0; k < m; ++k) x = step_exact(cfg, x);
    if (!inside(x)) fail("right endpoint return escapes");
}

std::string box_what(MapClass cls, const Word& wm, const Word& wp) {
    std::string s(1, class_letter(cls));
    s += "(" + wm + "," + wp + ")";
    return s;
}

}  // namespace

MapClass induced_class(const DoubleCover& cover, const Word& w_minus, const Word& w_plus) {
    bool left_inc = orientation(cover, w_minus) > 0;
    bool right_inc = orientation(cover, w_plus) > 0;
    if (left_inc) return right_inc ? MapClass::A : MapClass::B;
    return right_inc ? MapClass::D : MapClass::C;
}

ParamRect box_corners(const DoubleCover& cover, MapClass cls, const Word& w_minus,
                      const Word& w_plus, bool validate) {
    CornerSequences cs = corner_sequences(cls, w_minus, w_plus);
    ParamRect rect{address(cover, cs.a_lo), address(cover, cs.a_hi), address(cover, cs.b_lo),
                   address(cover, cs.b_hi)};
    if (!(rect.a_lo <= rect.a_hi && rect.b_lo <= rect.b_hi))
        throw OracleError("box oracle: degenerate rectangle for " +
                          box_what(cls, w_minus, w_plus));
    if (validate) {
        size_t n = w_minus.size(), m = w_plus.size();
        Rational ca = (rect.a_lo + rect.a_hi) / 2, cb = (rect.b_lo + rect.b_hi) / 2;
        std::string what = box_what(cls, w_minus, w_plus);
        validate_at(cover, rect, n, m, ca, cb, what);
        Rational da = (rect.a_hi - rect.a_lo) / 8, db = (rect.b_hi - rect.b_lo) / 8;
        for (int corner = 0; corner < 4; ++corner) {
            Rational a = (corner & 1) ? rect.a_hi - da : rect.a_lo + da;
            Rational b = (corner & 2) ? rect.b_hi - db : rect.b_lo + db;
            if (rect.a_lo == rect.a_hi) a = rect.a_lo;
            if (rect.b_lo == rect.b_hi) b = rect.b_lo;
            validate_at(cover, rect, n, m, a, b, what);
        }
    }
    return rect;
}

ParamBox root_box(const DoubleCover& cover) {
    ParamBox box;
    box.cls = cover.cls;
    box.w_minus = "0";
    box.w_plus = "1";
    box.label = "root";
    box.rect = ParamRect{cover.a_m, cover.a_M, cover.b_M, cover.b_m};
    return box;
}

std::vector<std::pair<long, long>> farey_pairs(int q_max) {
    std::vector<std::pair<long, long>> out;
    for (long q = 2; q <= q_max; ++q)
        for (long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) out.push_back({p, q});
    return out;
}

namespace {

struct LocalChild {
    Word wm, wp;
    std::string label;
};

std::vector<LocalChild> local_children(MapClass cls, int q_max, int n_max) {
    std::vector<LocalChild> out;
    auto cfam = [&](bool mirrored) {
        for (int n = 0; n <= n_max; ++n) {
            LocalChild ch;
            if (!mirrored) {  // C(0 1 0^{n+1}, 1 0^n)
                ch.wm = Word("01") + Word(size_t(n) + 1, '0');
                ch.wp = Word("1") + Word(size_t(n), '0');
            } else {  // mirror: C(0 1^n, 1 0 1^{n+1})
                ch.wm = Word("0") + Word(size_t(n), '1');
                ch.wp = Word("10") + Word(size_t(n) + 1, '1');
            }
            ch.label = "C(" + ch.wm + "," + ch.wp + ")";
            out.push_back(ch);
        }
    };
    switch (cls) {
        case MapClass::A:
            for (auto [p, q] : farey_pairs(q_max)) {
                SturmianBounds sb = sturmian_bounds(p, q);
                out.push_back({sb.r_minus, sb.r_plus,
                               "A(" + std::to_string(p) + "/" + std::to_string(q) + ")"});
            }
            break;
        case MapClass::B:
            out.push_back({"0", "11", "A(0,11)"});
            out.push_back({"01", "11", "D(01,11)"});
            cfam(false);
            break;
        case MapClass::C:
            out.push_back({"01", "11", "A(01,11)"});
            out.push_back({"0", "11", "D(0,11)"});
            out.push_back({"00", "1", "B(00,1)"});
            out.push_back({"00", "10", "A(00,10)"});
            break;
        case MapClass::D:
            out.push_back({"00", "1", "A(00,1)"});
            out.push_back({"00", "10", "B(00,10)"});
            cfam(true);
            break;
    }
    return out;
}

}  // namespace

std::vector<ParamBox> child_boxes(const DoubleCover& cover, const ParamBox& box, int q_max,
                                  int n_max) {
    std::vector<ParamBox> out;
    for (const LocalChild& ch : local_children(box.cls, q_max, n_max)) {
        ParamBox child;
        child.w_minus = compose_word(ch.wm, box.w_minus, box.w_plus);
        child.w_plus = compose_word(ch.wp, box.w_minus, box.w_plus);
        child.cls = induced_class(cover, child.w_minus, child.w_plus);
        child.label = ch.label;
        child.rect = box_corners(cover, child.cls, child.w_minus, child.w_plus);
        child.depth = box.depth + 1;
        out.push_back(std::move(child));
    }
    std::sort(out.begin(), out.end(), [](const ParamBox& x, const ParamBox& y) {
        return x.w_minus < y.w_minus || (x.w_minus == y.w_minus && x.w_plus < y.w_plus);
    });
    return out;
}

namespace {

struct AnchorSpec {
    std::string label;
    const char* km_pre;
    const char* km_per;
    const char* kp_pre;
    const char* kp_per;
};

const std::vector<AnchorSpec>& anchor_specs(MapClass cls) {
    static const std::vector<AnchorSpec> a{{"b_edge", "01", "0", "1", "0"},
                                           {"a_edge", "0", "1", "10", "1"}};
    static const std::vector<AnchorSpec> b{{"b_edge", "011", "0", "11", "0"},
                                           {"corner", "01", "0", "1", "0"}};
    static const std::vector<AnchorSpec> c{{"P1", "0", "01", "100", "01"},
                                           {"P2", "0010", "0", "10", "0"},
                                           {"P3", "0", "1", "110", "1"},
                                           {"P4", "011", "10", "1", "10"}};
    static const std::vector<AnchorSpec> d{{"a_edge", "00", "1", "100", "1"},
                                           {"corner", "0", "1", "10", "1"}};
    switch (cls) {
        case MapClass::A: return a;
        case MapClass::B: return b;
        case MapClass::C: return c;
        case MapClass::D: return d;
    }
    throw std::logic_error("unreachable");
}

SymbolSequence compose_seq(const char* pre, const char* per, const ParamBox& box) {
    return SymbolSequence(compose_word(pre, box.w_minus, box.w_plus),
                          compose_word(per, box.w_minus, box.w_plus));
}

}  // namespace

std::vector<EdgeAnchor> edge_anchors(const DoubleCover& cover, const ParamBox& box) {
    std::vector<EdgeAnchor> out;
    for (const AnchorSpec& spec : anchor_specs(box.cls)) {
        EdgeAnchor an;
        an.label = spec.label;
        an.k_minus = compose_seq(spec.km_pre, spec.km_per, box);
        an.k_plus = compose_seq(spec.kp_pre, spec.kp_per, box);
        an.a = address(cover, an.k_minus);
        an.b = address(cover, an.k_plus);
        out.push_back(std::move(an));
    }
    return out;
}

BoxTree box_tree(const DoubleCover& cover, int depth, int q_max, int n_max) {
    BoxTree tree;
    tree.boxes.push_back(root_box(cover));
    size_t level_begin = 0, level_end = 1;
    for (int d = 1; d <= depth; ++d) {
        size_t produced = 0;
        for (size_t i = level_begin; i < level_end; ++i) {
            ParamBox parent = tree.boxes[i];  // copy: push_back may reallocate
            for (ParamBox& ch : child_boxes(cover, parent, q_max, n_max)) {
                ch.parent = int(i);
                tree.boxes.push_back(std::move(ch));
                ++produced;
            }
        }
        tree.level_counts.push_back(produced);
        level_begin = level_end;
        level_end = tree.boxes.size();
    }
    return tree;
}

namespace {

// The truncated tail of the infinite C-family of a class-B/D box: the hull
// between the first omitted C-box and the accumulation corner.
std::optional<ParamRect> truncation_hull(const DoubleCover& cover, const ParamBox& box,
                                         int n_max) {
    if (box.cls != MapClass::B && box.cls != MapClass::D) return std::nullopt;
    bool mirrored = box.cls == MapClass::D;
    Word wm_local, wp_local;
    int n = n_max + 1;
    if (!mirrored) {
        wm_local = Word("01") + Word(size_t(n) + 1, '0');
        wp_local = Word("1") + Word(size_t(n), '0');
    } else {
        wm_local = Word("0") + Word(size_t(n), '1');
        wp_local = Word("10") + Word(size_t(n) + 1, '1');
    }
    Word wm = compose_word(wm_local, box.w_minus, box.w_plus);
    Word wp = compose_word(wp_local, box.w_minus, box.w_plus);
    ParamRect next = box_corners(cover, MapClass::C, wm, wp, /*validate=*/false);
    // corner anchor: the C-family limit
    const char* corner_pre_m = mirrored ? "0" : "01";
    const char* corner_per_m = mirrored ? "1" : "0";
    const char* corner_pre_p = mirrored ? "10" : "1";
    const char* corner_per_p = mirrored ? "1" : "0";
    Rational ca = address(cover, SymbolSequence(compose_word(corner_pre_m, box.w_minus, box.w_plus),
                                                compose_word(corner_per_m, box.w_minus, box.w_plus)));
    Rational cb = address(cover, SymbolSequence(compose_word(corner_pre_p, box.w_minus, box.w_plus),
                                                compose_word(corner_per_p, box.w_minus, box.w_plus)));
    ParamRect hull{std::min(next.a_lo, ca), std::max(next.a_hi, ca), std::min(next.b_lo, cb),
                   std::max(next.b_hi, cb)};
    return hull;
}

}  // namespace

DescentRecord descend(const PlateauConfig& cfg, int max_depth, int q_max, int n_max) {
    const DoubleCover& cover = cfg.cover;
    const Rational &a = cfg.a, &b = cfg.b;
    DescentRecord rec;
    ParamBox current = root_box(cover);
    for (int depth = 0; depth < max_depth; ++depth) {
        auto children = child_boxes(cover, current, q_max, n_max);
        const ParamBox* hit = nullptr;
        for (const ParamBox& ch : children) {
            if (!ch.rect.contains(a, b)) continue;
            if (!hit || (ch.cls == MapClass::A && hit->cls != MapClass::A)) hit = &ch;
        }
        if (hit) {
            rec.path.push_back(hit->label);
            rec.boxes.push_back(*hit);
            current = *hit;
            rec.depth_reached = depth + 1;
            continue;
        }
        // outside every child: decide the side on the diagonal a + b = c
        Rational c = a + b;
        bool any = false;
        Rational lo_min = 0, hi_max = 0;
        for (const ParamBox& ch : children) {
            Rational clo = ch.rect.a_lo + ch.rect.b_lo, chi = ch.rect.a_hi + ch.rect.b_hi;
            if (c < clo || c > chi) continue;
            Rational alo = std::max(ch.rect.a_lo, c - ch.rect.b_hi);
            Rational ahi = std::min(ch.rect.a_hi, c - ch.rect.b_lo);
            if (alo > ahi) continue;
            if (!any) {
                lo_min = alo;
                hi_max = ahi;
                any = true;
            } else {
                lo_min = std::min(lo_min, alo);
                hi_max = std::max(hi_max, ahi);
            }
        }
        if (any && a < lo_min) {
            rec.verdict = Verdict::non_chaotic;
            return rec;
        }
        if (any && a > hi_max) {
            rec.verdict = Verdict::chaotic;
            return rec;
        }
        if (!any) {
            auto anchors = edge_anchors(cover, current);
            Rational cmin = anchors[0].a + anchors[0].b, cmax = cmin;
            for (const auto& an : anchors) {
                cmin = std::min(cmin, an.a + an.b);
                cmax = std::max(cmax, an.a + an.b);
            }
            if (current.cls == MapClass::B || current.cls == MapClass::D) {
                auto hull = truncation_hull(cover, current, n_max);
                if (hull && hull->contains(a, b)) {
                    rec.verdict = Verdict::truncation_limit;
                    return rec;
                }
            }
            if (c < cmin || c > cmax) {
                rec.verdict = Verdict::non_chaotic;
                return rec;
            }
        }
        // in-range but between boxes: root class A resolves against the
        // curve R, everything else falls back to the exact decider
        if (current.cls == MapClass::A && current.depth == 0 && any) {
            Rational gap = Rational(cover.lambda - 1, cover.lambda);
            Rational r_line_b = a + gap * gap;
            rec.verdict = b >= r_line_b ? Verdict::non_chaotic : Verdict::chaotic;
            return rec;
        }
        rec.decided_by_entropy = true;
        rec.verdict = is_chaotic(cfg) ? Verdict::chaotic : Verdict::non_chaotic;
        return rec;
    }
    rec.verdict = Verdict::undetermined;
    return rec;
}

RotationData rotation_data(const DoubleCover& cover, const Rational& a, const Rational& b, int n) {
    if (cover.cls != MapClass::A) throw std::invalid_argument("rotation data needs a class-A cover");
    if (n < 1) throw std::invalid_argument("rotation_data needs n >= 1");
    PlateauConfig cfg = make_plateau(cover, a, b);
    Rational fa = step_exact(cfg, a), fb = step_exact(cfg, b);
    Rational f2a = step_exact(cfg, fa), f2b = step_exact(cfg, fb);
    if (!(fb <= cfg.c() && cfg.c() <= fa) || f2a != f2b || fa == fb)
        throw std::invalid_argument("parameters are not on the curve R");

    Rational len = fa - fb;
    Rational x = fb;  // F(a) and F(b) are glued
    long wraps = 0;
    long steps = 2 * n;
    std::map<Rational, std::pair<long, long>> visited;  // position -> (step, wraps)
    RotationData out;
    out.exact = false;
    for (long k = 0; k < steps; ++k) {
        auto it = visited.find(x);
        if (it != visited.end()) {
            long dk = k - it->second.first;
            long dw = wraps - it->second.second;
            out.exact = true;
            out.lo = out.hi = Rational(dw, dk);
            out.wraps = wraps;
            out.steps = k;
            return out;
        }
        visited[x] = {k, wraps};
        if (x >= cfg.c()) ++wraps;  // the lift adds one circumference here
        x = step_exact(cfg, x);
        if (x == fa) {  // landing on the glue point re-enters at the bottom
            x = fb;
            ++wraps;
        }
        if (x < fb || x > fa)
            throw std::invalid_argument("orbit leaves the circle interval (not on R)");
    }
    out.wraps = wraps;
    out.steps = steps;
    Rational rho(wraps, steps);
    Rational half(1, 2 * n);
    out.lo = std::max(Rational(0), rho - half);
    out.hi = std::min(Rational(1), rho + half);
    return out;
}

}  // namespace plateau
