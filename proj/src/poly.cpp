#include "runcount/poly.hpp"

#include "runcount/errors.hpp"

#include <cctype>
#include <cstddef>

namespace runcount {

void PolyT::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

Rational PolyT::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[k];
}

PolyT PolyT::monomial(const Rational& c, int k) {
    PolyT p;
    p.coeffs.assign(static_cast<std::size_t>(k) + 1, 0);
    p.coeffs[static_cast<std::size_t>(k)] = c;
    p.normalize();
    return p;
}

Rational PolyT::evalAt(const Rational& t) const {
    Rational v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

PolyT polyArith(const PolyT& a, const PolyT& b, PolyOp op) {
    PolyT r;
    if (op == PolyOp::Mul) {
        if (a.isZero() || b.isZero()) return r;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
            if (a.coeffs[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        }
    } else {
        r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
        for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
            Rational bi = (i < b.coeffs.size()) ? b.coeffs[i] : Rational(0);
            Rational ai = (i < a.coeffs.size()) ? a.coeffs[i] : Rational(0);
            r.coeffs[i] = (op == PolyOp::Add) ? Rational(ai + bi) : Rational(ai - bi);
        }
    }
    r.normalize();
    return r;
}

PolyT polyDivExact(const PolyT& a, const PolyT& b) {
    if (b.isZero()) throw InexactDivision("polynomial division by zero");
    if (a.isZero()) return PolyT();
    if (a.degree() < b.degree())
        throw InexactDivision("inexact polynomial division: " + polyToString(a) +
                              " by " + polyToString(b));
    /* long division; any nonzero remainder is an error */
    std::vector<Rational> rem = a.coeffs;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    const Rational lead = b.coeffs.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + b.degree())] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs[static_cast<std::size_t>(j)];
    }
    for (const Rational& c : rem)
        if (c != 0)
            throw InexactDivision("inexact polynomial division: " + polyToString(a) +
                                  " by " + polyToString(b));
    return PolyT(std::move(quot));
}

PolyT operator+(const PolyT& a, const PolyT& b) { return polyArith(a, b, PolyOp::Add); }
PolyT operator-(const PolyT& a, const PolyT& b) { return polyArith(a, b, PolyOp::Sub); }
PolyT operator*(const PolyT& a, const PolyT& b) { return polyArith(a, b, PolyOp::Mul); }
PolyT operator-(const PolyT& a) { return polyArith(PolyT(), a, PolyOp::Sub); }

std::string polyToString(const PolyT& p) {
    if (p.isZero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = neg ? Rational(-c) : c;
        if (k == 0) {
            out += rationalToString(mag);
        } else {
            if (mag != 1) out += rationalToString(mag) + "*";
            out += (k == 1) ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

std::string polyToCsv(const PolyT& p) {
    if (p.isZero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k) out += ",";
        out += rationalToString(p.coeff(k));
    }
    return out;
}

namespace {

/* One term of a polynomial literal: [rational][*][t[^k]] */
PolyT parseTerm(const std::string& term) {
    if (term.empty()) throw ParseError("empty term in polynomial literal");
    const auto tpos = term.find('t');
    if (tpos == std::string::npos) return PolyT(parseRational(term));

    std::string coeffPart = term.substr(0, tpos);
    if (!coeffPart.empty() && coeffPart.back() == '*') coeffPart.pop_back();
    Rational c = 1;
    if (coeffPart == "-")
        c = -1;
    else if (!coeffPart.empty())
        c = parseRational(coeffPart);

    int power = 1;
    std::string powPart = term.substr(tpos + 1);
    if (!powPart.empty()) {
        if (powPart[0] != '^') throw ParseError("bad polynomial term '" + term + "'");
        try {
            power = std::stoi(powPart.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad exponent in term '" + term + "'");
        }
        if (power < 0) throw ParseError("negative exponent in term '" + term + "'");
    }
    return PolyT::monomial(c, power);
}

} // namespace

PolyT parsePolyT(const std::string& text) {
    std::string stripped;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped += c;
    if (stripped.empty()) throw ParseError("empty polynomial literal");

    /* split on +/- at top level (every '-' starts a new term except inside "^-") */
    PolyT result;
    std::string term;
    for (std::size_t i = 0; i < stripped.size(); ++i) {
        char c = stripped[i];
        if ((c == '+' || c == '-') && i > 0 && stripped[i - 1] != '^' &&
            stripped[i - 1] != '+' && stripped[i - 1] != '-' && stripped[i - 1] != '/' &&
            stripped[i - 1] != '*') {
            result = result + parseTerm(term);
            term.clear();
            if (c == '-') term += '-';
        } else {
            term += c;
        }
    }
    result = result + parseTerm(term);
    return result;
}

} // namespace runcount
