#include "doctest.h"

#include "runcount/errors.hpp"
#include "runcount/poly.hpp"

using namespace runcount;

TEST_CASE("rational parsing and printing") {
    CHECK(parseRational("3/4") == Rational(3, 4));
    CHECK(parseRational("-12") == Rational(-12));
    CHECK(rationalToString(Rational(22, 4)) == "11/2");
    CHECK(rationalToString(Rational(0)) == "0");
    CHECK(isInteger(Rational(8, 4)));
    CHECK_FALSE(isInteger(Rational(1, 3)));
    CHECK(toInteger(Rational(8, 4)) == 2);
    CHECK_THROWS_AS(parseRational("seven"), ParseError);
    CHECK_THROWS_AS(parseRational("1/0"), ParseError);
    CHECK_THROWS_AS(toInteger(Rational(1, 2)), InexactDivision);
}

TEST_CASE("polynomial arithmetic normalizes degrees") {
    const PolyT t = PolyT::t();
    const PolyT p = PolyT(1) + PolyT(2) * t;       // 1 + 2t
    const PolyT q = PolyT(3) - PolyT(2) * t;       // 3 - 2t
    CHECK((p + q).degree() == 0);                  // 4
    CHECK((p + q).coeff(0) == Rational(4));
    CHECK((p * q) == PolyT(std::vector<Rational>{3, 4, -4}));
    CHECK((p - p).degree() == -1);                 // zero polynomial
    CHECK((-p).coeff(1) == Rational(-2));
    CHECK(PolyT::monomial(Rational(5), 3).degree() == 3);
    CHECK(p.coeff(17) == Rational(0));
    CHECK(p.evalAt(Rational(2)) == Rational(5));
}

TEST_CASE("polynomial printing and parsing round-trip") {
    const PolyT t = PolyT::t();
    const PolyT p = PolyT(4) + PolyT(2) * t - t * t * t;
    CHECK(polyToString(p) == "4 + 2*t - t^3");
    CHECK(parsePolyT(polyToString(p)) == p);
    CHECK(polyToString(PolyT()) == "0");
    CHECK(parsePolyT("0") == PolyT());
    CHECK(parsePolyT("t") == t);
    CHECK(parsePolyT("-t^2") == -(t * t));
    CHECK(parsePolyT("1/2 + t") == PolyT(Rational(1, 2)) + t);
    CHECK(polyToCsv(p) == "4,2,0,-1");
    CHECK(polyToCsv(PolyT()) == "0");
    CHECK_THROWS_AS(parsePolyT("t^"), ParseError);
    CHECK_THROWS_AS(parsePolyT("2x"), ParseError);
}

TEST_CASE("exact polynomial division") {
    const PolyT t = PolyT::t();
    const PolyT quotient = PolyT(3) + t;
    const PolyT divisor = PolyT(1) - t + t * t;
    CHECK(polyDivExact(quotient * divisor, divisor) == quotient);
    CHECK(polyDivExact(PolyT(), divisor) == PolyT());
    CHECK_THROWS_AS(polyDivExact(PolyT(1) + t, t), InexactDivision);
    CHECK_THROWS_AS(polyDivExact(PolyT(1), PolyT()), InexactDivision);
}
