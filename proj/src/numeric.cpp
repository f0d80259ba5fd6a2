#include "atb/numeric.hpp"

#include <cctype>

namespace atb {

namespace {

bool canonical_digits(std::string_view s) {
    if (s.empty()) return false;
    if (s.size() > 1 && s[0] == '0') return false;  // no leading zeros
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(std::string_view token) {
    std::string_view body = token;
    bool negative = false;
    if (!body.empty() && body[0] == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den;
    bool has_den = false;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        has_den = true;
    }
    if (!canonical_digits(num) || (has_den && !canonical_digits(den)))
        throw ParseError("malformed rational '" + std::string(token) + "'");
    Int p(std::string(num));
    if (negative) {
        if (p == 0) throw ParseError("malformed rational '" + std::string(token) + "'");
        p = -p;
    }
    if (!has_den) return Rat(p);
    Int q(std::string(den));
    if (q == 0) throw ParseError("malformed rational '" + std::string(token) + "': zero denominator");
    if (gcd_int(p, q) != 1)
        throw ParseError("non-normalized rational '" + std::string(token) + "'");
    return Rat(p) / Rat(q);
}

std::string format_rational(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string decimal_string(const Rat& r, int max_digits) {
    Int num = numerator(r), den = denominator(r);
    bool negative = num < 0;
    if (negative) num = -num;
    Int whole = num / den, rem = num % den;
    std::string out = (negative && (whole != 0 || rem != 0)) ? "-" : "";
    out += whole.str();
    if (rem != 0) {
        std::string frac;
        for (int i = 0; i < max_digits && rem != 0; ++i) {
            rem *= 10;
            frac += (rem / den).str();
            rem %= den;
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace atb
