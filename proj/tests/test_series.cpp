#include "doctest.h"

#include "runcount/errors.hpp"
#include "runcount/euler.hpp"
#include "runcount/series.hpp"

using namespace runcount;

namespace {
Rational factorialQ(int n) { return Rational(factorial(n)); }
} // namespace

TEST_CASE("zigzag numbers via the boustrophedon recurrence") {
    const EulerTable table = eulerNumbers(12);
    const long long expected[] = {1,    1,     1,     2,      5,      16,  61,
                                  272,  1385,  7936,  50521,  353792, 2702765};
    for (int n = 0; n <= 12; ++n) CHECK(table.at(n) == BigInt(expected[n]));
}

TEST_CASE("builtin series expansions") {
    const int N = 8;
    const PolyT t = PolyT::t();
    SUBCASE("exponential with polynomial argument") {
        const Series e = builtinSeries(BuiltinKind::EXPS, t, 1, N);
        for (int n = 0; n <= N; ++n) {
            PolyT tn(1);
            for (int k = 0; k < n; ++k) tn = tn * t;
            CHECK(e.at(n) * factorialQ(n) == tn);
        }
    }
    SUBCASE("even and odd parts split the exponential") {
        const Series even = builtinSeries(BuiltinKind::EVEN, PolyT(1), 1, N);
        const Series odd = builtinSeries(BuiltinKind::ODD, PolyT(1), 1, N);
        CHECK(even + odd == builtinSeries(BuiltinKind::EXPS, PolyT(1), 1, N));
        CHECK(even.at(3) == PolyT());
        CHECK(odd.at(4) == PolyT());
    }
    SUBCASE("scale parameter multiplies x") {
        const Series doubled =
            builtinSeries(BuiltinKind::EXPS, PolyT(1), Rational(2), N);
        for (int n = 0; n <= N; ++n)
            CHECK(doubled.at(n) * factorialQ(n) ==
                  PolyT(Rational(BigInt(1) << n)));
    }
    SUBCASE("zigzag-weighted exponential") {
        const Series zig = builtinSeries(BuiltinKind::EULS, PolyT(1), 1, N);
        const EulerTable table = eulerNumbers(N);
        for (int n = 0; n <= N; ++n)
            CHECK(zig.at(n) * factorialQ(n) == PolyT(Rational(table.at(n))));
    }
    SUBCASE("kind names round-trip") {
        CHECK(builtinKindFromName("EXPS") == BuiltinKind::EXPS);
        CHECK(builtinKindFromName("EULS") == BuiltinKind::EULS);
        CHECK_THROWS_AS(builtinKindFromName("COSH"), SchemaError);
    }
}

TEST_CASE("series arithmetic and reciprocal") {
    const int N = 10;
    const Series one = Series::one(N);
    const Series x = Series::monomialX(1, PolyT(1), N);
    SUBCASE("geometric series inverts 1 - x") {
        const Series geom = seriesRecip(one - x);
        for (int n = 0; n <= N; ++n) CHECK(geom.at(n) == PolyT(1));
        CHECK(geom * (one - x) == one);
    }
    SUBCASE("reciprocal requires an invertible constant term") {
        CHECK_THROWS_AS(seriesRecip(x), NonUnitConstantTerm);
        Series tConst = Series::constant(PolyT::t(), N);
        CHECK_THROWS_AS(seriesRecip(tConst), NonUnitConstantTerm);
    }
    SUBCASE("truncation is silent past the bound") {
        CHECK(Series::monomialX(N + 3, PolyT(7), N) == Series::zero(N));
    }
    SUBCASE("mixed bounds are rejected") {
        CHECK_THROWS_AS(Series::one(4) + Series::one(5), BoundMismatch);
    }
    SUBCASE("coefficient scaling") {
        const Series exps = builtinSeries(BuiltinKind::EXPS, PolyT(1), 1, N);
        const Series scaled =
            scaleCoeffs(seriesRecip(one - x),
                        [](int n) -> Rational { return 1 / factorialQ(n); });
        CHECK(scaled == exps);
    }
    SUBCASE("exact coefficientwise division by a polynomial") {
        const PolyT p = PolyT(2) + PolyT::t();
        Series s = one + x;
        Series scaled = s;
        for (int n = 0; n <= N; ++n) scaled.at(n) = scaled.at(n) * p;
        CHECK(seriesDivExactPoly(scaled, p) == s);
        CHECK_THROWS_AS(seriesDivExactPoly(one, PolyT::t()), InexactDivision);
    }
}
