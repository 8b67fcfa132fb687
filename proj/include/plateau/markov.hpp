#pragma once

#include "plateau/cover.hpp"

#include <cstdint>
#include <vector>

namespace plateau {

enum class CellKind : uint8_t { branch, plateau, hole };

// Interval partition refined by the forward orbits of the critical set,
// with the 0/1 transition structure of the branch cells. Plateau / hole
// cells collapse dynamically and stay out of the matrix.
struct MarkovSystem {
    std::vector<Rational> points;             // sorted breakpoints
    std::vector<RatInterval> cells;           // consecutive intervals
    std::vector<CellKind> kind;               // per cell
    std::vector<int> node_of_cell;            // -1 for non-branch cells
    std::vector<int> cell_of_node;
    std::vector<std::vector<int>> adjacency;  // node -> covered nodes
    std::vector<RatInterval> remainder;       // plateau / hole cells

    size_t node_count() const { return cell_of_node.size(); }
};

// Rigorous spectral-radius enclosure of the transition matrix
// (Collatz-Wielandt bounds evaluated in exact arithmetic).
struct SpectralEnclosure {
    Rational lo;
    Rational hi;
};

struct EntropyResult {
    bool positive;    // exact, from the SCC structure
    double value;     // log spectral radius
    double bound;     // half-width of the log enclosure
    int matrix_size;
};

struct DimensionResult {
    enum class Method : uint8_t { markov_exact, cylinder_count };
    bool positive;  // meaningful for markov_exact only
    double value;
    double bound;
    Method method;
    int n;  // word length for the cylinder method
    int matrix_size;
};

// Markov system of the plateau map F_{a,b}: refines [a_m,b_m] by the closed
// forward orbits of {a, b, c(both sides), plateau values, endpoints} and
// verifies the Markov property cell by cell. Throws std::logic_error if the
// orbit closure exceeds its budget or a cell image misses the breakpoint
// set (both indicate an internal bug for rational integer-slope input).
MarkovSystem build_markov(const PlateauConfig& cfg);

// Markov system of the open map on [a_m,a] u [b,b_m]; the hole interior is
// remainder and orbits stop on entering it.
MarkovSystem build_survivor_markov(const DoubleCover& cover, const Rational& a, const Rational& b);

// True iff some strongly connected component is not a bare cycle.
bool spectral_positive(const MarkovSystem& sys);

SpectralEnclosure spectral_radius(const MarkovSystem& sys);

EntropyResult entropy(const MarkovSystem& sys);

// Exact h_top > 0 decision for the plateau map.
bool is_chaotic(const PlateauConfig& cfg);

// Hausdorff dimension of the survivor set, log rho / log lambda.
DimensionResult survivor_dimension(const DoubleCover& cover, const Rational& a, const Rational& b);

// Number of length-n branch words whose cylinder survives (stays in
// [a_m,a] u [b,b_m]) with nonempty interior, by exact interval descent.
std::uint64_t cylinder_count(const DoubleCover& cover, const Rational& a, const Rational& b, int n);

DimensionResult cylinder_dimension(const DoubleCover& cover, const Rational& a, const Rational& b, int n);

// Number of fixed points of F^p counted through closed walks of length p
// in the transition digraph (exact integer matrix power trace).
BigInt closed_walk_count(const MarkovSystem& sys, int p);

// True iff the map carries an orbit of minimal period p (Moebius count
// over walk traces; p prime or 1 is exact).
bool has_period(const MarkovSystem& sys, int p);

std::string matrix_triplets(const MarkovSystem& sys);
std::string partition_endpoints(const MarkovSystem& sys);

}  // namespace plateau
