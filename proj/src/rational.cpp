#include "splitoff/rational.hpp"

#include <cctype>

namespace splitoff {

std::string render_rational(const Rational& q) {
    const BigInt num = rational_num(q);
    const BigInt den = rational_den(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    const auto fail = [&](const char* why) -> void {
        throw ParseError("bad rational '" + text + "': " + why);
    };

    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }

    const auto digits = [&]() -> std::string {
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) fail("expected digits");
        return text.substr(start, i - start);
    };

    BigInt num(digits());
    BigInt den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = BigInt(digits());
        if (den == 0) fail("zero denominator");
    } else if (i < text.size() && text[i] == '.') {
        ++i;
        for (char c : digits()) {
            num *= 10;
            num += c - '0';
            den *= 10;
        }
    }
    if (i != text.size()) fail("trailing characters");

    Rational q(num, den);
    if (negative) q = -q;
    return q;
}

}  // namespace splitoff
