#include "plateau/boundary.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace plateau {

namespace {

Rational line_a_min(const DoubleCover& f, const Rational& c) {
    return std::max(f.a_m, c - f.b_m);
}
Rational line_a_max(const DoubleCover& f, const Rational& c) {
    return std::min(f.a_M, c - f.b_M);
}

bool chaotic_at(const DoubleCover& f, const Rational& a, const Rational& b, int& checks) {
    ++checks;
    return is_chaotic(make_plateau(f, a, b));
}

}  // namespace

BoundaryPoint alpha_of_c(const DoubleCover& cover, const Rational& c, const Rational& tol) {
    if (tol <= 0) throw std::invalid_argument("tol must be positive");
    Rational lo = line_a_min(cover, c), hi = line_a_max(cover, c);
    if (lo > hi) throw std::invalid_argument("line a+b=c misses the parameter box");
    BoundaryPoint out;
    out.c = c;
    if (!chaotic_at(cover, hi, c - hi, out.verdict_checks)) {
        out.kind = BoundaryPoint::Kind::all_zero;
        out.a_lo = out.a_hi = hi;
        return out;
    }
    if (chaotic_at(cover, lo, c - lo, out.verdict_checks)) {
        out.kind = BoundaryPoint::Kind::all_positive;
        out.a_lo = out.a_hi = lo;
        return out;
    }
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (chaotic_at(cover, mid, c - mid, out.verdict_checks)) hi = mid;
        else lo = mid;
    }
    out.kind = BoundaryPoint::Kind::bracket;
    out.a_lo = lo;
    out.a_hi = hi;
    return out;
}

std::vector<BoundaryPoint> trace(const DoubleCover& cover, const Rational& c_lo,
                                 const Rational& c_hi, int steps, const Rational& tol, int jobs) {
    if (steps < 2) throw std::invalid_argument("trace needs steps >= 2");
    if (c_lo >= c_hi) throw std::invalid_argument("trace needs c_lo < c_hi");
    std::vector<BoundaryPoint> out(static_cast<size_t>(steps));
    Rational span = c_hi - c_lo;
    std::atomic<int> next{0};
    auto worker = [&]() {
        while (true) {
            int k = next.fetch_add(1);
            if (k >= steps) return;
            Rational c = c_lo + span * k / (steps - 1);
            out[size_t(k)] = alpha_of_c(cover, c, tol);
        }
    };
    int nthreads = std::max(1, std::min(jobs, steps));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(nthreads));
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

RatInterval bisect_chaos_in_a(const DoubleCover& cover, const Rational& b, Rational lo,
                              Rational hi, const Rational& tol) {
    int checks = 0;
    if (chaotic_at(cover, lo, b, checks) || !chaotic_at(cover, hi, b, checks))
        throw std::invalid_argument("bisect_chaos_in_a needs opposite verdicts at the ends");
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (chaotic_at(cover, mid, b, checks)) hi = mid;
        else lo = mid;
    }
    return {lo, hi};
}

bool Segment::contains(const Rational& a, const Rational& b) const {
    const Rational& pin = a_pinned ? a : b;
    const Rational& t = a_pinned ? b : a;
    if (pin != pinned) return false;
    if (t < t_lo || t > t_hi) return false;
    if (t == t_lo && !lo_closed) return false;
    if (t == t_hi && !hi_closed) return false;
    return true;
}

namespace {

struct AffinePoint {  // value p + q * t in the free parameter t
    Rational p, q;
};

// Intersects the linear inequality  lhs.p + lhs.q t  (<= | >=)  rhs.p + rhs.q t
// into [lo, hi]; returns false when the feasible set becomes empty.
bool apply_constraint(const AffinePoint& lhs, const AffinePoint& rhs, bool leq_side, Rational& lo,
                      Rational& hi) {
    Rational coef = lhs.q - rhs.q;
    Rational bound = rhs.p - lhs.p;
    if (coef == 0) return leq_side ? lhs.p <= rhs.p : lhs.p >= rhs.p;
    Rational t = bound / coef;
    bool upper = leq_side == (coef > 0);  // coef * t <= bound when leq_side
    if (upper) {
        if (t < hi) hi = t;
    } else {
        if (t > lo) lo = t;
    }
    return lo <= hi;
}

}  // namespace

std::optional<Segment> heteroclinic_segment(const DoubleCover& cover, const ParamBox& family,
                                            long p, long q, int form) {
    if (form < 1 || form > 4) throw std::invalid_argument("form must be 1..4");
    Segment seg;
    seg.form = form;
    if (q <= 1) {
        seg.v = family.w_minus;
        seg.u = family.w_plus;
        seg.pq_label = "edge";
    } else {
        SturmianBounds sb = sturmian_bounds(p, q);
        seg.v = compose_word(sb.r_minus, family.w_minus, family.w_plus);
        seg.u = compose_word(sb.r_plus, family.w_minus, family.w_plus);
        seg.pq_label = std::to_string(p) + "/" + std::to_string(q);
    }
    const Word &u = seg.u, &v = seg.v;
    switch (form) {
        case 1: seg.k_minus = SymbolSequence({}, v); seg.k_plus = SymbolSequence(u, v); break;
        case 2: seg.k_minus = SymbolSequence(v + u, v); seg.k_plus = SymbolSequence(u, v); break;
        case 3: seg.k_minus = SymbolSequence(v, u); seg.k_plus = SymbolSequence({}, u); break;
        case 4: seg.k_minus = SymbolSequence(v, u); seg.k_plus = SymbolSequence(u + v, u); break;
    }
    seg.a_pinned = form == 1 || form == 4;
    const SymbolSequence& pinned_seq = seg.a_pinned ? seg.k_minus : seg.k_plus;
    const SymbolSequence& free_seq = seg.a_pinned ? seg.k_plus : seg.k_minus;
    seg.pinned = address(cover, pinned_seq);
    size_t absorb = seg.a_pinned ? u.size() : v.size();

    Rational lo = seg.a_pinned ? cover.b_M : cover.a_m;
    Rational hi = seg.a_pinned ? cover.b_m : cover.a_M;
    const AffinePoint pin_const{seg.pinned, 0};
    const AffinePoint free_param{0, 1};

    // free-coordinate orbit x_j(t), with symbol-consistency constraints up
    // to the plateau absorption step
    AffinePoint x{0, 1};
    for (size_t j = 1; j <= absorb; ++j) {
        int sym = free_seq.at(j - 1);
        const AffineBranch& br = sym == 0 ? cover.left : cover.right;
        x = {Rational(br.slope) * x.p + br.shift, Rational(br.slope) * x.q};
        if (j == absorb) break;
        int next_sym = free_seq.at(j);
        bool ok = next_sym == 0
                      ? apply_constraint(x, seg.a_pinned ? pin_const : free_param, true, lo, hi)
                      : apply_constraint(x, seg.a_pinned ? free_param : pin_const, false, lo, hi);
        if (!ok) return std::nullopt;
    }
    {   // absorption window: [a, c] for forms 1/4, [c, b] for forms 2/3
        AffinePoint cpt{cover.c, 0};
        bool ok = seg.a_pinned
                      ? apply_constraint(x, pin_const, false, lo, hi) &&
                            apply_constraint(x, cpt, true, lo, hi)
                      : apply_constraint(x, cpt, false, lo, hi) &&
                            apply_constraint(x, pin_const, true, lo, hi);
        if (!ok) return std::nullopt;
    }
    // pinned-coordinate orbit: fixed checks against the pin, free-side
    // constraints against t
    {
        SymbolSequence s = pinned_seq;
        size_t shifts = s.preperiod().size() + s.period().size();
        for (size_t k = 1; k <= shifts; ++k) {
            s = shift(s);
            Rational y = address(cover, s);
            int sym = s.at(0);
            AffinePoint ypt{y, 0};
            bool ok;
            if (sym == 0)
                ok = seg.a_pinned ? y <= seg.pinned
                                  : apply_constraint(ypt, free_param, true, lo, hi);
            else
                ok = seg.a_pinned ? apply_constraint(ypt, free_param, false, lo, hi)
                                  : y >= seg.pinned;
            if (!ok) return std::nullopt;
        }
    }
    if (lo > hi) return std::nullopt;
    seg.t_lo = lo;
    seg.t_hi = hi;

    // kneading verification at five sample points; an endpoint where the
    // c-landing convention flips is reported open
    size_t depth = std::max<size_t>(60, 3 * (u.size() + v.size()) + 8);
    Word expect_minus = seg.k_minus.prefix(depth);
    Word expect_plus = seg.k_plus.prefix(depth);
    auto verify = [&](const Rational& t) {
        Rational a = seg.a_pinned ? seg.pinned : t;
        Rational b = seg.a_pinned ? t : seg.pinned;
        KneadingPrefix kp = kneading_invariant(make_plateau(cover, a, b), depth);
        return kp.k_minus == expect_minus && kp.k_plus == expect_plus;
    };
    Rational w = hi - lo;
    seg.lo_closed = verify(lo);
    seg.hi_closed = w == 0 ? seg.lo_closed : verify(hi);
    if (w == 0) {
        if (!seg.lo_closed) return std::nullopt;
        return seg;
    }
    Rational inset = w / 1024;
    if (!seg.lo_closed && !verify(lo + inset))
        throw OracleError("heteroclinic segment: kneading verification failed near t_lo");
    if (!seg.hi_closed && !verify(hi - inset))
        throw OracleError("heteroclinic segment: kneading verification failed near t_hi");
    for (int k = 1; k <= 3; ++k)
        if (!verify(lo + w * k / 4))
            throw OracleError("heteroclinic segment: kneading verification failed inside");
    return seg;
}

std::vector<Segment> family_segments(const DoubleCover& cover, const ParamBox& family, int q_max) {
    std::vector<Segment> out;
    for (int form = 1; form <= 4; ++form) {
        if (auto seg = heteroclinic_segment(cover, family, 1, 1, form)) out.push_back(*seg);
        for (auto [p, q] : farey_pairs(q_max))
            if (auto seg = heteroclinic_segment(cover, family, p, q, form)) out.push_back(*seg);
    }
    return out;
}

AnharmonicResult anharmonic_point(const DoubleCover& cover, MapClass cls, const Rational& b,
                                  const Rational& tol) {
    if (cls != MapClass::B && cls != MapClass::C)
        throw std::invalid_argument("anharmonic cascade lives in classes B and C");
    if (cover.cls != cls) throw std::invalid_argument("cover class must match cls");
    Rational xstar = right_fixed_point(cover);
    if (b < cover.b_M || b > xstar) throw std::invalid_argument("b outside [b_M, x*]");
    if (tol <= 0) throw std::invalid_argument("tol must be positive");

    AnharmonicResult out;
    Word wm = "0", wp = "1";
    MapClass family = cls;
    for (int level = 0; level < 64; ++level) {
        if (family == MapClass::C) {  // apply the B(00,1) step
            wm = wm + wm;
            family = MapClass::B;
        } else {  // apply the C(010,1) step
            wm = wm + wp + wm;
            family = MapClass::C;
        }
        ParamRect rect = box_corners(cover, family, wm, wp);
        out.nested_a.push_back({rect.a_lo, rect.a_hi});
        out.nested_b.push_back({rect.b_lo, rect.b_hi});
        if (out.nested_a.size() >= 2 && rect.a_hi - rect.a_lo <= tol) break;
    }
    out.enclosure = out.nested_a.back();

    size_t prefix_len = std::max<size_t>(64, wm.size());
    Word w_prefix = anharmonic_prefix(cls, prefix_len);
    RatInterval lo_cyl = address_cylinder(cover, "11" + w_prefix);
    RatInterval hi_cyl = address_cylinder(cover, "1" + w_prefix);
    out.b_segment_outer = {lo_cyl.lo, hi_cyl.hi};
    out.b_segment_inner = {lo_cyl.hi, hi_cyl.lo};
    out.b_on_segment = out.b_segment_inner.lo < b && b < out.b_segment_inner.hi;
    return out;
}

const char* classification_name(Classification::Type t) {
    switch (t) {
        case Classification::Type::heteroclinic_segment: return "HeteroclinicSegment";
        case Classification::Type::anharmonic_point: return "AnharmonicPoint";
        case Classification::Type::infinite_renorm: return "InfiniteRenorm";
        case Classification::Type::irrational_rotation: return "IrrationalRotation";
        case Classification::Type::undetermined: return "Undetermined";
        case Classification::Type::truncation_limit: return "TruncationLimit";
    }
    return "?";
}

namespace {

bool anharmonic_tail(const std::vector<std::string>& path, MapClass& tail_class) {
    if (path.size() < 4) return false;
    auto is_pair = [&](const std::string& x, const std::string& y, const char* b1,
                       const char* b2) { return (x == b1 && y == b2) || (x == b2 && y == b1); };
    size_t n = path.size();
    bool bc = true, dc = true;
    for (size_t i = n - 4; i + 1 < n; ++i) {
        if (!is_pair(path[i], path[i + 1], "B(00,1)", "C(010,1)")) bc = false;
        if (!is_pair(path[i], path[i + 1], "D(0,11)", "C(0,101)")) dc = false;
    }
    if (bc) {
        tail_class = MapClass::C;
        return true;
    }
    if (dc) {
        tail_class = MapClass::B;
        return true;
    }
    return false;
}

}  // namespace

Classification classify_point(const PlateauConfig& cfg, int max_depth, int q_max, int n_max) {
    const DoubleCover& cover = cfg.cover;
    const Rational &a = cfg.a, &b = cfg.b;
    Classification res;
    ParamBox current = root_box(cover);
    for (int depth = 0; depth < max_depth; ++depth) {
        res.depth = depth;
        if (current.cls == MapClass::A) {
            for (const Segment& seg : family_segments(cover, current, q_max)) {
                if (seg.contains(a, b)) {
                    res.type = Classification::Type::heteroclinic_segment;
                    res.segment = seg;
                    return res;
                }
            }
        }
        auto children = child_boxes(cover, current, q_max, n_max);
        const ParamBox* hit = nullptr;
        for (const ParamBox& ch : children) {
            if (!ch.rect.contains(a, b)) continue;
            if (!hit || (ch.cls == MapClass::A && hit->cls != MapClass::A)) hit = &ch;
        }
        if (hit) {
            res.path.push_back(hit->label);
            current = *hit;
            continue;
        }
        if (current.cls == MapClass::A) {
            try {
                RotationData rd = rotation_data(cover, a, b, 512);
                res.rotation = rd;
                if (!rd.exact) {
                    bool small_rational = false;
                    for (auto [pp, qq] : farey_pairs(q_max))
                        if (rd.lo <= Rational(pp, qq) && Rational(pp, qq) <= rd.hi)
                            small_rational = true;
                    if (rd.lo <= 0 || rd.hi >= 1) small_rational = true;
                    if (!small_rational) {
                        res.type = Classification::Type::irrational_rotation;
                        return res;
                    }
                }
            } catch (const std::invalid_argument&) {
            }
        }
        res.type = Classification::Type::undetermined;
        return res;
    }
    res.depth = max_depth;
    MapClass tail;
    if (anharmonic_tail(res.path, tail)) {
        res.type = Classification::Type::anharmonic_point;
        res.tail_class = tail;
    } else {
        res.type = Classification::Type::infinite_renorm;
    }
    return res;
}

}  // namespace plateau
