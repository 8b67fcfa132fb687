#include "plateau/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plateau {

char class_letter(MapClass c) {
    switch (c) {
        case MapClass::A: return 'A';
        case MapClass::B: return 'B';
        case MapClass::C: return 'C';
        case MapClass::D: return 'D';
    }
    return '?';
}

MapClass class_from_letter(char c) {
    switch (c) {
        case 'A': case 'a': return MapClass::A;
        case 'B': case 'b': return MapClass::B;
        case 'C': case 'c': return MapClass::C;
        case 'D': case 'd': return MapClass::D;
    }
    throw std::invalid_argument(std::string("unknown class letter '") + c + "'");
}

int parity(MapClass cls, int symbol) {
    bool left = symbol == 0;
    switch (cls) {
        case MapClass::A: return 1;
        case MapClass::B: return left ? 1 : -1;
        case MapClass::C: return -1;
        case MapClass::D: return left ? -1 : 1;
    }
    return 1;
}

static void check_word(const Word& w) {
    for (char ch : w)
        if (ch != '0' && ch != '1') throw std::invalid_argument("word symbols must be 0/1");
}

SymbolSequence::SymbolSequence(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
    check_word(pre_);
    check_word(per_);
    canonicalize();
}

SymbolSequence SymbolSequence::finite(Word w) {
    check_word(w);
    SymbolSequence s;
    s.pre_ = std::move(w);
    return s;
}

// Smallest d dividing n with w = root^k; classic failure-function-free scan.
static size_t primitive_root_length(const Word& w) {
    size_t n = w.size();
    for (size_t d = 1; d <= n / 2; ++d) {
        if (n % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < n && ok; ++i) ok = w[i] == w[i - d];
        if (ok) return d;
    }
    return n;
}

void SymbolSequence::canonicalize() {
    if (per_.empty()) return;
    per_.resize(primitive_root_length(per_));
    // absorb trailing preperiod symbols that merely rotate the period
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.begin(), per_.begin() + per_.size() - 1, per_.end());
    }
}

SymbolSequence SymbolSequence::parse(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos) return SymbolSequence::finite(text);
    if (text.back() != ')') throw std::invalid_argument("expected ')' in sequence literal");
    Word pre = text.substr(0, open);
    Word per = text.substr(open + 1, text.size() - open - 2);
    if (per.empty()) throw std::invalid_argument("empty period in sequence literal");
    return SymbolSequence(std::move(pre), std::move(per));
}

std::string SymbolSequence::str() const {
    if (per_.empty()) return pre_;
    return pre_ + "(" + per_ + ")";
}

int SymbolSequence::at(size_t i) const {
    if (i < pre_.size()) return pre_[i] - '0';
    if (per_.empty()) throw std::out_of_range("index past the end of a finite word");
    return per_[(i - pre_.size()) % per_.size()] - '0';
}

Word SymbolSequence::prefix(size_t n) const {
    if (per_.empty() && n > pre_.size()) n = pre_.size();
    Word out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) out.push_back(char('0' + at(i)));
    return out;
}

SymbolSequence shift(const SymbolSequence& s) {
    if (s.is_finite()) {
        if (s.preperiod().empty()) throw std::invalid_argument("cannot shift the empty word");
        return SymbolSequence::finite(s.preperiod().substr(1));
    }
    if (!s.preperiod().empty()) return SymbolSequence(s.preperiod().substr(1), s.period());
    Word rotated = s.period().substr(1) + s.period().substr(0, 1);
    return SymbolSequence({}, std::move(rotated));
}

static size_t decision_horizon(const SymbolSequence& s, const SymbolSequence& t) {
    if (s.is_finite() && t.is_finite()) return std::max(s.finite_size(), t.finite_size());
    if (s.is_finite() || t.is_finite()) {
        const auto& fin = s.is_finite() ? s : t;
        return fin.finite_size();
    }
    size_t ps = s.period().size(), pt = t.period().size();
    size_t l = std::lcm(ps, pt);
    return std::max(s.preperiod().size(), t.preperiod().size()) + l + 1;
}

Order compare(MapClass cls, const SymbolSequence& s, const SymbolSequence& t) {
    size_t horizon = decision_horizon(s, t);
    int prod = 1;
    for (size_t i = 0; i < horizon; ++i) {
        bool s_end = s.is_finite() && i >= s.finite_size();
        bool t_end = t.is_finite() && i >= t.finite_size();
        if (s_end || t_end) return s_end && t_end ? Order::Equal : Order::Prefix;
        int a = s.at(i), b = t.at(i);
        if (a != b) {
            bool s_less = (prod > 0) == (a < b);
            return s_less ? Order::Less : Order::Greater;
        }
        prod *= parity(cls, a);
    }
    bool s_end = s.is_finite() && horizon >= s.finite_size();
    bool t_end = t.is_finite() && horizon >= t.finite_size();
    if (s_end != t_end) return Order::Prefix;
    return Order::Equal;
}

bool less(MapClass cls, const SymbolSequence& s, const SymbolSequence& t) {
    return compare(cls, s, t) == Order::Less;
}

bool leq(MapClass cls, const SymbolSequence& s, const SymbolSequence& t) {
    Order o = compare(cls, s, t);
    return o == Order::Less || o == Order::Equal;
}

bool is_compatible_pair(MapClass cls, const KneadingInvariant& k) {
    const auto& km = k.k_minus;
    const auto& kp = k.k_plus;
    if (km.is_finite() || kp.is_finite()) throw std::invalid_argument("compatibility needs sequences");
    if (km.at(0) != 0 || kp.at(0) != 1) return false;
    for (const SymbolSequence* seq : {&km, &kp}) {
        size_t shifts = seq->preperiod().size() + seq->period().size();
        SymbolSequence cur = *seq;
        for (size_t r = 0; r < shifts; ++r) {
            if (!(leq(cls, cur, km) || leq(cls, kp, cur))) return false;
            cur = shift(cur);
        }
    }
    return true;
}

SymbolSequence balanced_word(long p, long q) {
    if (!(0 < p && p < q)) throw std::invalid_argument("balanced_word needs 0 < p < q");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("balanced_word needs gcd(p,q) = 1");
    Word w;
    w.reserve(size_t(q));
    for (long k = 0; k < q; ++k) {
        long s = (k + 1) * p / q - k * p / q;
        w.push_back(char('0' + s));
    }
    return SymbolSequence::periodic(std::move(w));
}

bool is_balanced(const SymbolSequence& s, size_t max_segment) {
    size_t window = s.preperiod().size() + 2 * std::max<size_t>(1, s.period().size());
    window = std::max(window, 2 * max_segment);
    for (size_t len = 1; len <= max_segment; ++len) {
        int lo = int(len), hi = 0;
        for (size_t start = 0; start + len <= window; ++start) {
            int ones = 0;
            for (size_t i = 0; i < len; ++i) ones += s.at(start + i);
            lo = std::min(lo, ones);
            hi = std::max(hi, ones);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

SturmianBounds sturmian_bounds(long p, long q) {
    SymbolSequence w = balanced_word(p, q);
    Word per = w.period();
    size_t n = per.size();
    auto rotation = [&](size_t k) {
        return SymbolSequence::periodic(per.substr(k) + per.substr(0, k));
    };
    SymbolSequence best_max = rotation(0), best_min = rotation(0);
    for (size_t k = 1; k < n; ++k) {
        SymbolSequence r = rotation(k);
        // lexicographic comparison = class A order
        if (compare(MapClass::A, best_max, r) == Order::Less) best_max = r;
        if (compare(MapClass::A, r, best_min) == Order::Less) best_min = r;
    }
    SturmianBounds out;
    out.max_shift = best_max;
    out.min_shift = best_min;
    out.r_minus = "0" + best_max.prefix(size_t(q) - 1);
    out.r_plus = "1" + best_min.prefix(size_t(q) - 1);
    return out;
}

Word compose_word(const Word& w, const Word& parent_minus, const Word& parent_plus) {
    Word out;
    out.reserve(w.size() * std::max(parent_minus.size(), parent_plus.size()));
    for (char ch : w) out += (ch == '0') ? parent_minus : parent_plus;
    return out;
}

Word apply_replacement(MapClass cls, const Word& w) {
    check_word(w);
    switch (cls) {
        case MapClass::C: return compose_word(w, "00100", "1");
        case MapClass::B: return compose_word(w, "010010", "1");
        default: throw std::invalid_argument("replacement rules exist for classes B and C only");
    }
}

Word anharmonic_prefix(MapClass cls, size_t length) {
    if (length < 1) throw std::invalid_argument("length must be >= 1");
    Word w = "0";
    while (w.size() < length) w = apply_replacement(cls, w);
    return w.substr(0, length);
}

std::vector<BigInt> cascade_periods(MapClass cls, int n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (cls != MapClass::B && cls != MapClass::C)
        throw std::invalid_argument("cascade periods exist for classes B and C only");
    std::vector<BigInt> out;
    out.reserve(size_t(n_max) + 1);
    BigInt pow2 = 1;
    for (int n = 0; n <= n_max; ++n, pow2 *= 2) {
        int sgn = (n % 2 == 0) ? 1 : -1;
        BigInt v;
        if (cls == MapClass::C) v = (4 * pow2 - sgn) / 3;
        else v = (5 * pow2 + sgn) / 3;
        out.push_back(v);
    }
    // consistency gate: doubling recurrence, sign flipped between the classes
    for (int n = 0; n < n_max; ++n) {
        int sgn = (n % 2 == 0) ? 1 : -1;
        BigInt expect = 2 * out[size_t(n)];
        if (cls == MapClass::C) expect += sgn;
        else expect -= sgn;
        if (out[size_t(n) + 1] != expect)
            throw std::logic_error("cascade period recurrence violated");
    }
    return out;
}

}  // namespace plateau
