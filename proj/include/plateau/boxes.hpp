#pragma once

#include "plateau/cover.hpp"
#include "plateau/markov.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plateau {

// Induced-map oracle failure: a constructed box violated the return-map
// conditions. Mapped to exit code 4 by the CLI.
struct OracleError : std::logic_error {
    using std::logic_error::logic_error;
};

// Renormalization rectangle X(w-, w+) in hole-parameter space. Words are
// composed down to root addresses, so rect corners are root coordinates.
// The rectangle doubles as the induced cover data: the induced interval is
// [a_lo, b_hi] and the branch break points are a_hi and b_lo.
struct ParamBox {
    MapClass cls;       // class of the induced map
    Word w_minus;       // starts with 0 (root symbols)
    Word w_plus;        // starts with 1
    std::string label;  // local name, e.g. "B(00,1)" or "A(1/2)"
    ParamRect rect;
    int depth = 0;
    int parent = -1;

    RatInterval phase() const { return {rect.a_lo, rect.b_hi}; }
};

// Exact corners of X(w-, w+) for an induced map of the given class,
// computed as addresses of the periodic boundary itineraries. Every box is
// validated against the Def.-style return conditions at its center and near
// all four corners; throws OracleError on failure.
ParamRect box_corners(const DoubleCover& cover, MapClass cls, const Word& w_minus,
                      const Word& w_plus, bool validate = true);

ParamBox root_box(const DoubleCover& cover);

// Orientation-derived class of the induced map (w-, w+) over the cover.
MapClass induced_class(const DoubleCover& cover, const Word& w_minus, const Word& w_plus);

// One-level decomposition of the complete family living on `box`:
//   A -> A(r-_{p/q}, r+_{p/q}) over coprime p/q with q <= q_max
//   B -> A(0,11), D(01,11), C(010^{n+1}, 10^n) for n <= n_max
//   C -> A(01,11), D(0,11), B(00,1), A(00,10)
//   D -> mirror of B.
std::vector<ParamBox> child_boxes(const DoubleCover& cover, const ParamBox& box, int q_max,
                                  int n_max);

struct EdgeAnchor {
    std::string label;
    Rational a, b;
    SymbolSequence k_minus, k_plus;
};

// Points where the boundary of chaos meets the box edges (the P_i of the
// class-C decomposition and their class-A/B/D analogues), composed through
// the box words. point = (alpha(k-), alpha(k+)).
std::vector<EdgeAnchor> edge_anchors(const DoubleCover& cover, const ParamBox& box);

struct BoxTree {
    std::vector<ParamBox> boxes;       // root first, then level by level
    std::vector<size_t> level_counts;  // boxes per depth (excluding root)
};

BoxTree box_tree(const DoubleCover& cover, int depth, int q_max, int n_max);

enum class Verdict : uint8_t { chaotic, non_chaotic, undetermined, truncation_limit };

struct DescentRecord {
    std::vector<std::string> path;  // local labels of entered boxes
    std::vector<ParamBox> boxes;    // the entered boxes themselves
    Verdict verdict = Verdict::undetermined;
    bool decided_by_entropy = false;  // geometric side test was inconclusive
    int depth_reached = 0;
};

// Walks the box tree from the root family of cfg: recurses into the child
// containing (a,b) (preferring A-boxes on overlaps), or decides the side
// geometrically when the point lies outside every child on its diagonal.
DescentRecord descend(const PlateauConfig& cfg, int max_depth, int q_max, int n_max);

struct RotationData {
    Rational lo, hi;  // enclosure of the rotation number
    bool exact;       // the orbit closed up; lo == hi
    long wraps;
    long steps;
};

// Rotation number of the circle map induced on [F(b), F(a)] for class-A
// parameters on the curve R : F^2(a) = F^2(b), F(b) <= c <= F(a).
RotationData rotation_data(const DoubleCover& cover, const Rational& a, const Rational& b, int n);

// Coprime pairs (p, q) with 0 < p < q <= q_max, ordered by (q, p).
std::vector<std::pair<long, long>> farey_pairs(int q_max);

}  // namespace plateau
