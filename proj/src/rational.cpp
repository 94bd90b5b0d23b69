#include "runcount/rational.hpp"

#include "runcount/errors.hpp"

#include <cctype>

namespace runcount {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool isInteger(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

BigInt toInteger(const Rational& q) {
    if (!isInteger(q))
        throw InexactDivision("expected an integer, got " + rationalToString(q));
    return boost::multiprecision::numerator(q);
}

std::string rationalToString(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    if (!isInteger(q)) s += "/" + boost::multiprecision::denominator(q).str();
    return s;
}

Rational parseRational(const std::string& text) {
    std::string stripped;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    if (stripped.empty()) throw ParseError("empty rational literal");

    const auto slash = stripped.find('/');
    BigInt num, den = 1;
    try {
        if (slash == std::string::npos) {
            num = BigInt(stripped);
        } else {
            num = BigInt(stripped.substr(0, slash));
            den = BigInt(stripped.substr(slash + 1));
        }
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational literal '" + text + "': " + e.what());
    }
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(num, den);
}

} // namespace runcount
