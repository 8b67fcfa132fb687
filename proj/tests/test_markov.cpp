#include "plateau/markov.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace plateau;

namespace {

Rational rat(const char* t) { return parse_rational(t); }

PlateauConfig cfg_of(MapClass cls, const char* a, const char* b, long lambda = 2) {
    DoubleCover f = canonical_cover(cls, lambda);
    return make_plateau(f, rat(a), rat(b));
}

}  // namespace

TEST_CASE("doubling MSDM partition and entropy") {
    MarkovSystem sys = build_markov(cfg_of(MapClass::A, "1/2", "1/2"));
    REQUIRE(sys.node_count() == 2);
    CHECK(sys.cells.size() == 2);
    CHECK(sys.adjacency[0] == std::vector<int>{0, 1});
    CHECK(sys.adjacency[1] == std::vector<int>{0, 1});
    EntropyResult e = entropy(sys);
    CHECK(e.positive);
    CHECK(std::abs(e.value - std::log(2.0)) <= 1e-12);
    CHECK(e.bound <= 1e-12);
}

TEST_CASE("full tent map") {
    MarkovSystem sys = build_markov(cfg_of(MapClass::B, "1/2", "1/2"));
    REQUIRE(sys.node_count() == 2);
    CHECK(spectral_positive(sys));
    CHECK(std::abs(entropy(sys).value - std::log(2.0)) <= 1e-12);
}

TEST_CASE("maximal hole: empty matrix, everything in the remainder") {
    MarkovSystem sys = build_markov(cfg_of(MapClass::A, "0", "1"));
    CHECK(sys.node_count() == 0);
    Rational covered = 0;
    for (const auto& cell : sys.remainder) covered += cell.width();
    CHECK(covered == 1);
    EntropyResult e = entropy(sys);
    CHECK_FALSE(e.positive);
    CHECK(e.value == 0.0);
}

TEST_CASE("plain cycles are not chaotic") {
    CHECK_FALSE(is_chaotic(cfg_of(MapClass::A, "0", "5/8")));
    CHECK_FALSE(is_chaotic(cfg_of(MapClass::C, "0", "3/4")));
    CHECK(is_chaotic(cfg_of(MapClass::A, "1/2", "1/2")));
    CHECK(is_chaotic(cfg_of(MapClass::A, "3/8", "1/2")));
}

TEST_CASE("edge lemma spot checks, class C on b = b_M") {
    // transition at a = 1/8: F(a) > c together with F^2(a) > b_M
    CHECK_FALSE(is_chaotic(cfg_of(MapClass::C, "1/8", "1/2")));
    CHECK_FALSE(is_chaotic(cfg_of(MapClass::C, "1/16", "1/2")));
    CHECK(is_chaotic(cfg_of(MapClass::C, "9/64", "1/2")));
    CHECK(is_chaotic(cfg_of(MapClass::C, "1/3", "1/2")));  // F(a) < c branch
}

TEST_CASE("survivor dimension benchmarks") {
    DoubleCover A = canonical_cover(MapClass::A, 2);
    DimensionResult full = survivor_dimension(A, rat("1/2"), rat("1/2"));
    CHECK(full.positive);
    CHECK(std::abs(full.value - 1.0) <= 1e-12);

    DimensionResult two = survivor_dimension(A, rat("1/4"), rat("3/4"));
    CHECK_FALSE(two.positive);
    CHECK(two.value == 0.0);

    DimensionResult mid = survivor_dimension(A, rat("7/16"), rat("9/16"));
    CHECK(mid.positive);
    CHECK(mid.value > 0.0);
    CHECK(mid.value < 1.0);
}

TEST_CASE("cylinder counting") {
    DoubleCover A = canonical_cover(MapClass::A, 2);
    CHECK(cylinder_count(A, rat("1/2"), rat("1/2"), 10) == 1024);  // nothing escapes
    CHECK(cylinder_count(A, rat("0"), rat("1"), 3) == 0);
    for (int n = 1; n <= 10; ++n)
        CHECK(cylinder_count(A, rat("1/4"), rat("3/4"), n) == 2);
}

TEST_CASE("cylinder submultiplicativity and dimension consistency") {
    DoubleCover A = canonical_cover(MapClass::A, 2);
    Rational a = rat("7/16"), b = rat("9/16");
    auto n_of = [&](int n) { return cylinder_count(A, a, b, n); };
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 4}, {5, 5}, {8, 6}, {10, 10}})
        CHECK(n_of(m + n) <= n_of(m) * n_of(n));

    DimensionResult exact = survivor_dimension(A, a, b);
    double c_fit = 0.0;
    for (int n = 8; n <= 20; n += 4) {
        DimensionResult est = cylinder_dimension(A, a, b, n);
        double diff = std::abs(est.value - exact.value);
        c_fit = std::max(c_fit, diff * n);
        CHECK(diff <= 2.0 / n);  // first-order finite-size error
    }
    MESSAGE("fitted C for |log N_n/(n log 2) - dim| <= C/n: ", c_fit);
}

TEST_CASE("entropy/dimension positivity equivalence on random holes") {
    std::mt19937_64 rng(60902);
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        DoubleCover f = canonical_cover(cls, 2);
        for (int trial = 0; trial < 60; ++trial) {
            Rational a = oracles::random_rational(rng, 48) / 2;  // [0, 1/2]
            Rational b = Rational(1, 2) + oracles::random_rational(rng, 48) / 2;
            DimensionResult dim = survivor_dimension(f, a, b);
            bool chaotic = is_chaotic(make_plateau(f, a, b));
            REQUIRE(dim.positive == chaotic);
        }
    }
}

TEST_CASE("hole monotonicity of entropy") {
    std::mt19937_64 rng(77001);
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        DoubleCover f = canonical_cover(cls, 2);
        for (int trial = 0; trial < 40; ++trial) {
            Rational a2 = oracles::random_rational(rng, 32) / 2;
            Rational b2 = Rational(1, 2) + oracles::random_rational(rng, 32) / 2;
            // shrink the hole: a1 >= a2, b1 <= b2
            Rational a1 = a2 + (f.a_M - a2) * Rational(1, 3);
            Rational b1 = b2 - (b2 - f.b_M) * Rational(1, 3);
            EntropyResult small_hole = entropy(build_markov(make_plateau(f, a1, b1)));
            EntropyResult large_hole = entropy(build_markov(make_plateau(f, a2, b2)));
            REQUIRE(small_hole.value + small_hole.bound + large_hole.bound + 1e-12 >=
                    large_hole.value);
            if (large_hole.positive) REQUIRE(small_hole.positive);
        }
    }
}

TEST_CASE("closed walks and periods") {
    MarkovSystem sys = build_markov(cfg_of(MapClass::A, "1/2", "1/2"));
    CHECK(closed_walk_count(sys, 1) == 2);
    CHECK(closed_walk_count(sys, 3) == 8);
    CHECK(has_period(sys, 1));
    CHECK(has_period(sys, 3));
    MarkovSystem zero = build_markov(cfg_of(MapClass::A, "0", "5/8"));
    CHECK_FALSE(spectral_positive(zero));
}

TEST_CASE("matrix and partition exports") {
    MarkovSystem sys = build_markov(cfg_of(MapClass::A, "1/2", "1/2"));
    CHECK(matrix_triplets(sys) == "0 0 1\n0 1 1\n1 0 1\n1 1 1\n");
    CHECK(partition_endpoints(sys) == "0 1/2 1\n");
}

TEST_CASE("survivor markov of the open map records the hole") {
    DoubleCover A = canonical_cover(MapClass::A, 2);
    MarkovSystem sys = build_survivor_markov(A, rat("1/4"), rat("3/4"));
    CHECK(sys.node_count() == 2);
    bool hole_covered = false;
    for (const auto& cell : sys.remainder)
        if (cell.lo == rat("1/4") || cell.hi == rat("3/4")) hole_covered = true;
    CHECK(hole_covered);
    CHECK_FALSE(spectral_positive(sys));
}
