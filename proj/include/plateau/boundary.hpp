#pragma once

#include "plateau/boxes.hpp"

#include <optional>

namespace plateau {

// Bracket of the boundary of chaos on the line a + b = c: the verdict is
// exactly false at a_lo and exactly true at a_hi (kind == bracket), or the
// whole line is on one side.
struct BoundaryPoint {
    enum class Kind : uint8_t { bracket, all_zero, all_positive };
    Rational c;
    Rational a_lo, a_hi;
    Kind kind = Kind::bracket;
    int verdict_checks = 0;

    Rational b_lo() const { return c - a_hi; }
    Rational b_hi() const { return c - a_lo; }
    Rational width() const { return a_hi - a_lo; }
};

// Bisection on the diagonal a + b = c with the exact entropy decider; all
// probes are rational so every verdict is exact. c outside the admissible
// range comes back as a whole-line verdict.
BoundaryPoint alpha_of_c(const DoubleCover& cover, const Rational& c, const Rational& tol);

// alpha_of_c on `steps` equally spaced lines; steps run on `jobs` threads.
std::vector<BoundaryPoint> trace(const DoubleCover& cover, const Rational& c_lo,
                                 const Rational& c_hi, int steps, const Rational& tol,
                                 int jobs = 1);

// Bisection of is_chaotic in a at fixed b. Requires opposite verdicts at
// the interval ends.
RatInterval bisect_chaos_in_a(const DoubleCover& cover, const Rational& b, Rational lo,
                              Rational hi, const Rational& tol);

// Heteroclinic parameter segment realizing one of the four boundary
// kneading forms built from u = r+_{p/q}, v = r-_{p/q} (composed through a
// box chain): 1: (v^inf, u v^inf)   2: (v u v^inf, u v^inf)
//             3: (v u^inf, u^inf)   4: (v u^inf, u v u^inf)
// One coordinate is pinned at the address of the periodic sequence; the
// other ranges over [t_lo, t_hi]. An endpoint is open when the kneading
// convention at c flips exactly there.
struct Segment {
    int form;
    std::string pq_label;
    Word u, v;
    SymbolSequence k_minus, k_plus;
    bool a_pinned;  // true: a fixed, b free
    Rational pinned;
    Rational t_lo, t_hi;
    bool lo_closed, hi_closed;

    bool contains(const Rational& a, const Rational& b) const;
};

// Exact segment construction with kneading verification at five sample
// points; returns nullopt when the form is not realized (empty constraint
// set) and throws OracleError when verification fails.
std::optional<Segment> heteroclinic_segment(const DoubleCover& cover, const ParamBox& family,
                                            long p, long q, int form);

// All verified segments of one A-family: the four forms for every p/q with
// q <= q_max plus the degenerate edge family (u, v) = (w+, w-).
std::vector<Segment> family_segments(const DoubleCover& cover, const ParamBox& family, int q_max);

// Nested renormalization tower of the anharmonic cascade (alternating
// B(00,1) / C(010,1) boxes). The a-intervals nest onto the cascade
// parameter a_*; the b-intervals nest onto the segment on which the
// cascade forms the boundary of chaos. b inside that segment is required
// for the kneading/bisection claims to hold at this b (the stated
// precondition b in [b_M, x*] admits b where the transition is a plain
// edge transition instead; see the b_segment fields).
struct AnharmonicResult {
    std::vector<RatInterval> nested_a;  // one per tower level
    RatInterval enclosure;              // final a-interval
    std::vector<RatInterval> nested_b;
    RatInterval b_segment_outer;  // contains the true b-segment
    RatInterval b_segment_inner;  // contained in the true b-segment
    bool b_on_segment;            // b strictly inside the inner enclosure
};

AnharmonicResult anharmonic_point(const DoubleCover& cover, MapClass cls, const Rational& b,
                                  const Rational& tol);

struct Classification {
    enum class Type : uint8_t {
        heteroclinic_segment,
        anharmonic_point,
        infinite_renorm,
        irrational_rotation,
        undetermined,
        truncation_limit,
    };
    Type type = Type::undetermined;
    std::vector<std::string> path;
    int depth = 0;
    std::optional<Segment> segment;
    std::optional<RotationData> rotation;
    MapClass tail_class = MapClass::B;  // for anharmonic points
};

// Classifies a near-boundary parameter per the box descent: heteroclinic
// segment membership in an A-family, the two anharmonic tail alternations,
// rotation data on the curve R, otherwise an infinite-renormalization
// prefix or undetermined at max_depth.
Classification classify_point(const PlateauConfig& cfg, int max_depth, int q_max, int n_max);

const char* classification_name(Classification::Type t);

}  // namespace plateau
