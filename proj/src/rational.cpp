#include "gsh/rational.hpp"

#include <cctype>

#include "gsh/errors.hpp"

namespace gsh {

namespace {

bool isInteger(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

}  // namespace

Rat makeRat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat ratFromString(const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!isInteger(num) || !isInteger(den))
            throw ParseError("malformed rational literal '" + s + "'");
        mpz_class n(num), d(den);
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        Rat r(n, d);
        r.canonicalize();
        return r;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string intPart = s.substr(0, dot);
        std::string fracPart = s.substr(dot + 1);
        bool negative = false;
        if (!intPart.empty() && (intPart[0] == '-' || intPart[0] == '+')) {
            negative = intPart[0] == '-';
            intPart.erase(intPart.begin());
        }
        if (intPart.empty() && fracPart.empty())
            throw ParseError("malformed rational literal '" + s + "'");
        for (const std::string* part : {&intPart, &fracPart})
            for (char c : *part)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError("malformed rational literal '" + s + "'");
        mpz_class n(intPart.empty() ? std::string("0") : intPart);
        for (std::size_t i = 0; i < fracPart.size(); ++i) n *= 10;
        if (!fracPart.empty()) n += mpz_class(fracPart);
        mpz_class d(1);
        for (std::size_t i = 0; i < fracPart.size(); ++i) d *= 10;
        Rat r(negative ? mpz_class(-n) : n, d);
        r.canonicalize();
        return r;
    }

    if (!isInteger(s)) throw ParseError("malformed rational literal '" + s + "'");
    return Rat(mpz_class(s));
}

std::string ratToString(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double ratToDouble(const Rat& value) { return value.get_d(); }

}  // namespace gsh
