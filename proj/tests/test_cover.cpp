#include "plateau/cover.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace plateau;

namespace {

SymbolSequence seq(const char* t) { return SymbolSequence::parse(t); }
Rational rat(const char* t) { return parse_rational(t); }

}  // namespace

TEST_CASE("canonical covers obey the class boundary conditions") {
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        for (long lambda : {2L, 3L, 5L}) {
            DoubleCover f = canonical_cover(cls, lambda);
            CHECK(f.left(f.a_m) == (parity(cls, 0) > 0 ? f.a_m : f.b_m));
            CHECK(f.right(f.b_m) == (parity(cls, 1) > 0 ? f.b_m : f.a_m));
            // each branch maps its piece onto the full interval
            Rational lo = std::min(f.left(f.a_m), f.left(f.a_M));
            Rational hi = std::max(f.left(f.a_m), f.left(f.a_M));
            CHECK(lo == f.a_m);
            CHECK(hi == f.b_m);
            lo = std::min(f.right(f.b_M), f.right(f.b_m));
            hi = std::max(f.right(f.b_M), f.right(f.b_m));
            CHECK(lo == f.a_m);
            CHECK(hi == f.b_m);
        }
    }
    DoubleCover a2 = canonical_cover(MapClass::A, 2);
    CHECK(a2.left(rat("1/4")) == rat("1/2"));
    DoubleCover c2 = canonical_cover(MapClass::C, 2);
    CHECK(c2.left(rat("0")) == 1);
    CHECK(c2.right(rat("1")) == 0);
    DoubleCover b2 = canonical_cover(MapClass::B, 2);
    CHECK(b2.left(rat("1/2")) == 1);  // tent peak
    CHECK_THROWS_AS(canonical_cover(MapClass::A, 1), std::invalid_argument);
}

TEST_CASE("plateau evaluation with one-sided values") {
    DoubleCover f = canonical_cover(MapClass::A, 2);
    PlateauConfig cfg = make_plateau(f, rat("3/8"), rat("5/8"));
    CHECK(evaluate(cfg, rat("1/4"), Side::minus) == rat("1/2"));
    CHECK(evaluate(cfg, rat("1/2"), Side::minus) == rat("3/4"));
    CHECK(evaluate(cfg, rat("1/2"), Side::plus) == rat("1/4"));
    CHECK(evaluate(cfg, rat("3/8"), Side::plus) == rat("3/4"));  // continuous at a
    CHECK(evaluate(cfg, rat("7/10"), Side::minus) == rat("2/5"));
    CHECK_THROWS_AS(evaluate(cfg, rat("2"), Side::minus), std::invalid_argument);
    CHECK_THROWS_AS(make_plateau(f, rat("3/4"), rat("5/8")), std::invalid_argument);
}

TEST_CASE("itineraries") {
    DoubleCover A = canonical_cover(MapClass::A, 2);
    PlateauConfig msdm = make_plateau(A, rat("1/2"), rat("1/2"));
    CHECK(itinerary(msdm, rat("1/3"), Side::plus, 8) == "01010101");
    CHECK(itinerary(msdm, rat("0"), Side::plus, 5) == "00000");
    DoubleCover C = canonical_cover(MapClass::C, 2);
    PlateauConfig msdm_c = make_plateau(C, rat("1/2"), rat("1/2"));
    CHECK(itinerary(msdm_c, rat("0"), Side::plus, 6) == "010101");
}

TEST_CASE("kneading invariants of benchmark parameters") {
    DoubleCover A = canonical_cover(MapClass::A, 2);
    // the b = b_M edge anchor
    KneadingPrefix k = kneading_invariant(make_plateau(A, rat("1/4"), rat("1/2")), 10);
    CHECK(k.k_minus == seq("01(0)").prefix(10));
    CHECK(k.k_plus == seq("1(0)").prefix(10));
    // the doubling MSDM
    k = kneading_invariant(make_plateau(A, rat("1/2"), rat("1/2")), 10);
    CHECK(k.k_minus == seq("0(1)").prefix(10));
    CHECK(k.k_plus == seq("1(0)").prefix(10));
    // class C MSDM: c- falls onto the alternating boundary orbit
    DoubleCover C = canonical_cover(MapClass::C, 2);
    k = kneading_invariant(make_plateau(C, rat("1/2"), rat("1/2")), 10);
    CHECK(k.k_minus == seq("0(01)").prefix(10));
    CHECK(k.k_plus == seq("1(10)").prefix(10));
}

TEST_CASE("exact addresses") {
    DoubleCover C = canonical_cover(MapClass::C, 2);
    CHECK(address(C, seq("(0)")) == rat("1/3"));
    CHECK(address(C, seq("1(0)")) == rat("5/6"));
    CHECK(address(C, seq("001(0)")) == rat("11/24"));
    CHECK(address(C, seq("(01)")) == 0);
    CHECK(address(C, seq("0(1)")) == rat("1/6"));
    CHECK(address(C, seq("11(01)")) == rat("1/2"));
    CHECK(address(C, seq("(1)")) == rat("2/3"));
    DoubleCover A = canonical_cover(MapClass::A, 2);
    CHECK(address(A, seq("1(0)")) == rat("1/2"));
    CHECK(address(A, seq("(01)")) == rat("1/3"));
    CHECK_THROWS_AS(address(A, SymbolSequence::finite("01")), std::invalid_argument);
}

TEST_CASE("address cylinders bracket addresses of extensions") {
    std::mt19937_64 rng(4242);
    for (MapClass cls : {MapClass::A, MapClass::C}) {
        DoubleCover f = canonical_cover(cls, 2);
        for (int trial = 0; trial < 200; ++trial) {
            SymbolSequence s = oracles::random_sequence(rng);
            for (size_t len : {size_t(1), size_t(3), size_t(6)}) {
                RatInterval cyl = address_cylinder(f, s.prefix(len));
                CHECK(cyl.contains(address(f, s)));
            }
        }
    }
}

TEST_CASE("right fixed points") {
    CHECK(right_fixed_point(canonical_cover(MapClass::C, 2)) == rat("2/3"));
    CHECK(right_fixed_point(canonical_cover(MapClass::B, 2)) == rat("2/3"));
    CHECK(right_fixed_point(canonical_cover(MapClass::A, 2)) == 1);
    CHECK(right_fixed_point(canonical_cover(MapClass::D, 2)) == 1);
    CHECK(right_fixed_point(canonical_cover(MapClass::C, 3)) == rat("3/4"));
}

TEST_CASE("order consistency: space order matches the parity order") {
    std::mt19937_64 rng(20240601);
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        DoubleCover f = canonical_cover(cls, 2);
        PlateauConfig cfg = make_plateau(f, rat("3/8"), rat("11/16"));
        int tested = 0;
        for (int trial = 0; trial < 3000 && tested < 2000; ++trial) {
            Rational x = oracles::random_rational(rng, 97);
            Rational y = oracles::random_rational(rng, 89);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            if (cfg.in_hole(x) || cfg.in_hole(y)) continue;
            Word wx = itinerary(cfg, x, Side::plus, 64);
            Word wy = itinerary(cfg, y, Side::minus, 64);
            Order o = compare(cls, SymbolSequence::finite(wx), SymbolSequence::finite(wy));
            REQUIRE(o != Order::Greater);
            ++tested;
        }
        CHECK(tested >= 1000);
    }
}

TEST_CASE("conjugacy: itinerary of the image is the shifted itinerary") {
    std::mt19937_64 rng(99);
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        DoubleCover f = canonical_cover(cls, 2);
        PlateauConfig cfg = make_plateau(f, rat("5/16"), rat("21/32"));
        int tested = 0;
        for (int trial = 0; trial < 12000 && tested < 600; ++trial) {
            Rational x = oracles::random_rational(rng, 509);
            // skip orbits through c, the only genuinely two-valued point
            // when a < c < b
            bool clean = true;
            Rational y = x;
            for (int k = 0; k < 34 && clean; ++k) {
                if (y == cfg.c()) clean = false;
                y = step_exact(cfg, y);
            }
            if (!clean) continue;
            Word w_long = itinerary(cfg, x, Side::plus, 33);
            Word w_img = itinerary(cfg, step_exact(cfg, x), Side::plus, 32);
            REQUIRE(w_long.substr(1) == w_img);
            ++tested;
        }
        CHECK(tested >= 300);
    }
}

TEST_CASE("address round-trip through itineraries") {
    std::mt19937_64 rng(31337);
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        DoubleCover f = canonical_cover(cls, 2);
        PlateauConfig cover_cfg = make_plateau(f, f.a_M, f.b_M);
        for (int trial = 0; trial < 250; ++trial) {
            SymbolSequence s = oracles::random_sequence(rng);
            Rational x = address(f, s);
            REQUIRE(f.a_m <= x);
            REQUIRE(x <= f.b_m);
            Word want = s.prefix(48);
            Word got_plus = itinerary(cover_cfg, x, Side::plus, 48);
            Word got_minus = itinerary(cover_cfg, x, Side::minus, 48);
            bool ok = got_plus == want || got_minus == want;
            REQUIRE(ok);
        }
    }
}

TEST_CASE("complete families are full: compatible pairs are realized") {
    std::mt19937_64 rng(5150);
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        DoubleCover f = canonical_cover(cls, 2);
        int realized = 0;
        for (int trial = 0; trial < 4000 && realized < 100; ++trial) {
            SymbolSequence km = oracles::random_sequence(rng, true, 0);
            SymbolSequence kp = oracles::random_sequence(rng, true, 1);
            if (!is_compatible_pair(cls, {km, kp})) continue;
            Rational a = address(f, km);
            Rational b = address(f, kp);
            REQUIRE(a <= f.a_M);
            REQUIRE(b >= f.b_M);
            KneadingPrefix k = kneading_invariant(make_plateau(f, a, b), 60);
            REQUIRE(k.k_minus == km.prefix(60));
            REQUIRE(k.k_plus == kp.prefix(60));
            ++realized;
        }
        CHECK(realized == 100);
    }
}

TEST_CASE("lambda = 3 covers keep the machinery exact") {
    DoubleCover f = canonical_cover(MapClass::A, 3);
    CHECK(f.a_M == rat("1/3"));
    CHECK(f.b_M == rat("2/3"));
    CHECK(address(f, seq("(1)")) == 1);
    CHECK(address(f, seq("(01)")) == rat("1/4"));  // 3x then 3x-2 cycle
    PlateauConfig cfg = make_plateau(f, f.a_M, f.b_M);
    CHECK(itinerary(cfg, rat("1/4"), Side::plus, 8) == "01010101");
}

TEST_CASE("parameter pair serialization") {
    auto [a, b] = parse_param_pair("a=3/8,b=5/8");
    CHECK(a == rat("3/8"));
    CHECK(b == rat("5/8"));
    CHECK_THROWS_AS(parse_param_pair("3/8,5/8"), std::invalid_argument);
    CHECK(to_string(rat("-7/3")) == "-7/3");
    CHECK(parse_rational("0.75") == rat("3/4"));
}
