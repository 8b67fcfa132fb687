#include "plateau/rational.hpp"

namespace plateau {

std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    BigInt den = denominator(r);
    if (den != 1) {
        s += "/";
        s += den.str();
    }
    return s;
}

std::optional<Rational> try_parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto digits_ok = [](const std::string& s, size_t from) {
        if (from >= s.size()) return false;
        for (size_t i = from; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    auto slash = text.find('/');
    auto dot = text.find('.');
    try {
        if (slash != std::string::npos) {
            std::string num = text.substr(0, slash);
            std::string den = text.substr(slash + 1);
            size_t nstart = (num.size() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
            if (!digits_ok(num, nstart) || !digits_ok(den, 0)) return std::nullopt;
            BigInt d(den);
            if (d == 0) return std::nullopt;
            return Rational(BigInt(num), d);
        }
        if (dot != std::string::npos) {
            std::string whole = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            if (whole.size() == start) whole += "0";
            if (!digits_ok(whole, start) || (!frac.empty() && !digits_ok(frac, 0))) return std::nullopt;
            BigInt scale = 1;
            for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
            BigInt w(whole);
            bool neg = w < 0;
            BigInt mag = abs(w) * scale + (frac.empty() ? BigInt(0) : BigInt(frac));
            Rational r(mag, scale);
            return neg ? -r : r;
        }
        if (!digits_ok(text, start)) return std::nullopt;
        return Rational(BigInt(text));
    } catch (...) {
        return std::nullopt;
    }
}

Rational parse_rational(const std::string& text) {
    auto r = try_parse_rational(text);
    if (!r) throw std::invalid_argument("cannot parse rational: '" + text + "'");
    return *r;
}

}  // namespace plateau
