#include "plateau/words.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace plateau;

TEST_CASE("sequence literals round-trip and canonicalize") {
    CHECK(SymbolSequence::parse("0(01)").str() == "0(01)");
    CHECK(SymbolSequence::parse("010").str() == "010");
    // non-canonical spellings collapse to one form
    CHECK(SymbolSequence::parse("(0101)") == SymbolSequence::parse("(01)"));
    CHECK(SymbolSequence::parse("00(10)") == SymbolSequence::parse("0(01)"));
    CHECK(SymbolSequence::parse("01(11)") == SymbolSequence::parse("0(1)"));
    CHECK(SymbolSequence::parse("0(01)") != SymbolSequence::parse("(01)"));
}

TEST_CASE("shift") {
    CHECK(shift(SymbolSequence::parse("0(01)")) == SymbolSequence::parse("(01)"));
    CHECK(shift(SymbolSequence::parse("(01)")) == SymbolSequence::parse("(10)"));
    CHECK(shift(SymbolSequence::parse("001(0)")) == SymbolSequence::parse("01(0)"));
    CHECK_THROWS_AS(shift(SymbolSequence::finite("")), std::invalid_argument);
}

TEST_CASE("parity order examples") {
    auto s = [](const char* t) { return SymbolSequence::parse(t); };
    CHECK(compare(MapClass::A, s("(0)"), s("01(0)")) == Order::Less);
    CHECK(compare(MapClass::C, s("(01)"), s("(0)")) == Order::Less);
    CHECK(compare(MapClass::C, s("(0)"), s("00(1)")) == Order::Less);
    CHECK(compare(MapClass::B, s("(10)"), s("(10)")) == Order::Equal);
    // finite prefixes report the third outcome instead of padding
    CHECK(compare(MapClass::A, s("010"), s("0101")) == Order::Prefix);
    CHECK(compare(MapClass::A, s("010"), s("011")) == Order::Less);
}

TEST_CASE("order is total on canonical sequences (random triples)") {
    std::mt19937_64 rng(12345);
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        for (int trial = 0; trial < 2500; ++trial) {
            auto x = oracles::random_sequence(rng);
            auto y = oracles::random_sequence(rng);
            auto z = oracles::random_sequence(rng);
            Order xy = compare(cls, x, y), yx = compare(cls, y, x);
            // antisymmetry
            if (xy == Order::Less) REQUIRE(yx == Order::Greater);
            if (xy == Order::Equal) REQUIRE(x == y);
            // transitivity
            if (xy == Order::Less && compare(cls, y, z) == Order::Less)
                REQUIRE(compare(cls, x, z) == Order::Less);
            // agreement with the brute-force first-difference scan
            int ref = oracles::compare_brute(cls, x.preperiod(), x.period(), y.preperiod(),
                                             y.period(), 256);
            Order want = ref < 0 ? Order::Less : ref > 0 ? Order::Greater : Order::Equal;
            REQUIRE(xy == want);
        }
    }
}

TEST_CASE("compatible pairs") {
    auto s = [](const char* t) { return SymbolSequence::parse(t); };
    CHECK(is_compatible_pair(MapClass::A, {s("(0)"), s("(1)")}));
    // realized on the class-A boundary (kneading pair of the b = b_M anchor)
    CHECK(is_compatible_pair(MapClass::A, {s("01(0)"), s("1(0)")}));
    // the doubling-map kneading pair: every sequence avoids the empty gap
    CHECK(is_compatible_pair(MapClass::A, {s("0(1)"), s("1(0)")}));
    // genuinely incompatible: a shift of k- falls strictly between the pair
    CHECK_FALSE(is_compatible_pair(MapClass::A, {s("00(01)"), s("1(0)")}));
    CHECK_FALSE(is_compatible_pair(MapClass::A, {s("(1)"), s("(1)")}));
}

TEST_CASE("compatibility agrees with the brute-force shift scan") {
    std::mt19937_64 rng(777);
    for (MapClass cls : {MapClass::A, MapClass::B, MapClass::C, MapClass::D}) {
        int seen_true = 0, seen_false = 0;
        for (int trial = 0; trial < 4000; ++trial) {
            auto km = oracles::random_sequence(rng, true, 0);
            auto kp = oracles::random_sequence(rng, true, 1);
            bool got = is_compatible_pair(cls, {km, kp});
            bool want = oracles::compatible_brute(cls, km, kp);
            REQUIRE(got == want);
            (got ? seen_true : seen_false)++;
        }
        CHECK(seen_true > 0);
        CHECK(seen_false > 0);
    }
}

TEST_CASE("mechanical words") {
    CHECK(balanced_word(1, 2) == SymbolSequence::parse("(01)"));
    CHECK(balanced_word(1, 3) == SymbolSequence::parse("(001)"));
    CHECK(balanced_word(2, 5) == SymbolSequence::parse("(00101)"));
    CHECK_THROWS_AS(balanced_word(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(balanced_word(3, 2), std::invalid_argument);
}

TEST_CASE("balancedness by exhaustive segment enumeration") {
    for (long q = 2; q <= 12; ++q)
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            SymbolSequence w = balanced_word(p, q);
            CHECK(is_balanced(w, size_t(q)));
            int ones = 0;
            for (size_t i = 0; i < w.period().size(); ++i) ones += w.at(i);
            CHECK(ones == p);
            CHECK(w.period().size() == size_t(q));
        }
    // a word that is not balanced
    CHECK_FALSE(is_balanced(SymbolSequence::parse("(0011)"), 4));
}

TEST_CASE("sturmian bounds") {
    auto b12 = sturmian_bounds(1, 2);
    CHECK(b12.r_minus == "01");
    CHECK(b12.r_plus == "10");
    auto b13 = sturmian_bounds(1, 3);
    CHECK(b13.r_minus == "010");
    CHECK(b13.r_plus == "100");
    auto b25 = sturmian_bounds(2, 5);
    CHECK(b25.r_minus == "01010");
    CHECK(b25.r_plus == "10010");
    CHECK(b25.max_shift == SymbolSequence::parse("(10100)"));
    CHECK(b25.min_shift == SymbolSequence::parse("(00101)"));
}

TEST_CASE("replacement rules") {
    CHECK(apply_replacement(MapClass::C, "0") == "00100");
    CHECK(apply_replacement(MapClass::C, "00100") == "001000010010010000100");
    CHECK(apply_replacement(MapClass::B, "1") == "1");
    CHECK(apply_replacement(MapClass::B, "0") == "010010");
    CHECK_THROWS_AS(apply_replacement(MapClass::A, "0"), std::invalid_argument);
}

TEST_CASE("anharmonic prefixes") {
    CHECK(anharmonic_prefix(MapClass::C, 5) == "00100");
    CHECK(anharmonic_prefix(MapClass::C, 11) == "00100001001");
    CHECK(anharmonic_prefix(MapClass::B, 6) == "010010");
    // fixed-point coherence: shorter prefixes embed in longer ones, and the
    // substitution reproduces prefixes
    for (MapClass cls : {MapClass::B, MapClass::C}) {
        Word long_w = anharmonic_prefix(cls, 400);
        for (size_t len : {1u, 7u, 50u, 193u})
            CHECK(anharmonic_prefix(cls, len) == long_w.substr(0, len));
        Word image = apply_replacement(cls, anharmonic_prefix(cls, 80));
        CHECK(image.substr(0, 300) == long_w.substr(0, 300));
    }
}

TEST_CASE("cascade periods") {
    auto c = cascade_periods(MapClass::C, 10);
    CHECK(c[0] == 1);
    CHECK(c[1] == 3);
    CHECK(c[2] == 5);
    CHECK(c[3] == 11);
    CHECK(c[4] == 21);
    CHECK(c[10] == 1365);
    auto b = cascade_periods(MapClass::B, 3);
    CHECK(b[0] == 2);
    CHECK(b[1] == 3);
    CHECK(b[2] == 7);
    CHECK(b[3] == 13);
    // the doubling recurrence holds exactly through n = 20 (the class-fixed
    // sign alternates: doubling minus one then doubling plus one)
    for (MapClass cls : {MapClass::B, MapClass::C}) {
        auto p = cascade_periods(cls, 20);
        for (int n = 0; n < 20; ++n) {
            BigInt d = p[size_t(n) + 1] - 2 * p[size_t(n)];
            CHECK(abs(d) == 1);
        }
    }
}

TEST_CASE("word composition matches the replacement factorization") {
    // R_B o R_C on symbols: substitute C(010,1) through B(00,1)
    CHECK(compose_word("010", "00", "1") == "00100");
    CHECK(compose_word("00", "010", "1") == "010010");
}
