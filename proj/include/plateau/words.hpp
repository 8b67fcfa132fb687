#pragma once

#include "plateau/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace plateau {

// Branch orientation classes of a two-branch map:
//   A: (increasing, increasing)   B: (increasing, decreasing)
//   C: (decreasing, decreasing)   D: (decreasing, increasing)
enum class MapClass : uint8_t { A, B, C, D };

char class_letter(MapClass c);
MapClass class_from_letter(char c);

// Parity of the branch carrying the given address symbol: +1 increasing,
// -1 decreasing.
int parity(MapClass cls, int symbol);

using Word = std::string;  // finite word over {'0','1'}

// Eventually periodic symbol sequence pre (per)^inf over {0,1}.
// An empty period marks a plain finite word (a prefix, not a sequence).
// Canonical form: the period is primitive and the preperiod is as short as
// possible, so equality of canonical forms decides equality of sequences.
class SymbolSequence {
  public:
    SymbolSequence() = default;
    SymbolSequence(Word preperiod, Word period);

    static SymbolSequence finite(Word w);
    static SymbolSequence periodic(Word period) { return SymbolSequence({}, std::move(period)); }

    // Parses the textual format "PRE(PERIOD)"; bare digits parse as a
    // finite word. Round-trips with str().
    static SymbolSequence parse(const std::string& text);
    std::string str() const;

    bool is_finite() const { return per_.empty(); }
    const Word& preperiod() const { return pre_; }
    const Word& period() const { return per_; }

    // symbol at position i as 0/1; for finite words i must be < size().
    int at(size_t i) const;
    size_t finite_size() const { return pre_.size(); }

    Word prefix(size_t n) const;

    bool operator==(const SymbolSequence& o) const { return pre_ == o.pre_ && per_ == o.per_; }

  private:
    void canonicalize();

    Word pre_;
    Word per_;
};

SymbolSequence shift(const SymbolSequence& s);

enum class Order : uint8_t { Less, Equal, Greater, Prefix };

// The parity-twisted order <_s for the given class. Finite words of unequal
// length where one is a prefix of the other compare as Order::Prefix.
Order compare(MapClass cls, const SymbolSequence& s, const SymbolSequence& t);
bool less(MapClass cls, const SymbolSequence& s, const SymbolSequence& t);
bool leq(MapClass cls, const SymbolSequence& s, const SymbolSequence& t);

struct KneadingInvariant {
    SymbolSequence k_minus;  // starts with 0
    SymbolSequence k_plus;   // starts with 1
};

// Checks that every shift of k_- and k_+ stays weakly outside the open
// interval (k_-, k_+) in the <_s order. Both sequences must be eventually
// periodic; the scan over shifts is finite.
bool is_compatible_pair(MapClass cls, const KneadingInvariant& k);

// Mechanical word w_{p/q}: symbol k is floor((k+1)p/q) - floor(kp/q).
// Requires 0 < p < q, gcd(p,q) = 1. Purely periodic with period length q.
SymbolSequence balanced_word(long p, long q);

// Definition check used by tests: any two equal-length segments of the
// periodic word differ by at most one in their 1-count.
bool is_balanced(const SymbolSequence& s, size_t max_segment);

struct SturmianBounds {
    Word r_minus;            // [0 M]_q
    Word r_plus;             // [1 m]_q
    SymbolSequence max_shift;  // M = max_k sigma^k w
    SymbolSequence min_shift;  // m = min_k sigma^k w
};

// Lexicographic extremes over cyclic shifts of w_{p/q} and the derived
// boundary words r+-.
SturmianBounds sturmian_bounds(long p, long q);

// Substitution step of the anharmonic cascade: class C sends 0 -> 00100,
// class B sends 0 -> 010010; 1 is fixed in both.
Word apply_replacement(MapClass cls, const Word& w);

// First `length` symbols of the substitution fixed point starting from "0".
Word anharmonic_prefix(MapClass cls, size_t length);

// Periods p_0..p_n of the cascade. Class C: p_n = (4*2^n - (-1)^n)/3,
// class B: p_n = (5*2^n + (-1)^n)/3. Verifies the doubling recurrence
// p_{n+1} = 2 p_n -+ (-1)^n (sign by class) and throws on mismatch.
std::vector<BigInt> cascade_periods(MapClass cls, int n_max);

// 0 -> parent_minus, 1 -> parent_plus, applied symbolwise.
Word compose_word(const Word& w, const Word& parent_minus, const Word& parent_plus);

}  // namespace plateau
