#ifndef RUNCOUNT_SERIES_HPP
#define RUNCOUNT_SERIES_HPP

#include "runcount/poly.hpp"

#include <functional>
#include <string>
#include <vector>

namespace runcount {

/* Truncated formal power series in x over PolyT, exact for every coefficient
   of degree <= bound.  Binary operations require matching bounds. */
struct Series {
    int bound = 0;
    std::vector<PolyT> coeffs; // coeffs[n] multiplies x^n; size bound+1

    Series() : coeffs(1) {}
    explicit Series(int N) : bound(N), coeffs(static_cast<std::size_t>(N) + 1) {}

    static Series zero(int N) { return Series(N); }
    static Series one(int N) { return constant(PolyT(1), N); }
    static Series constant(const PolyT& c, int N);
    /* c * x^power; powers beyond the bound truncate to zero */
    static Series monomialX(int power, const PolyT& c, int N);

    const PolyT& at(int n) const { return coeffs.at(static_cast<std::size_t>(n)); }
    PolyT& at(int n) { return coeffs.at(static_cast<std::size_t>(n)); }

    bool operator==(const Series& o) const { return bound == o.bound && coeffs == o.coeffs; }
    bool operator!=(const Series& o) const { return !(*this == o); }
};

enum class SeriesOp { Add, Sub, Mul };

Series seriesArith(const Series& a, const Series& b, SeriesOp op);

/* Multiplicative inverse up to the bound; the constant term must be a nonzero
   rational (degree-0 polynomial), otherwise NonUnitConstantTerm is thrown. */
Series seriesRecip(const Series& a);

/* Multiply the coefficient of x^n by mu(n) -- the degree-indexed scalings
   mu(n) = 1, 1/n!, E_n/n! implement the word/permutation/alternating maps. */
Series scaleCoeffs(const Series& a, const std::function<Rational(int)>& mu);

/* Coefficientwise exact division by a polynomial. */
Series seriesDivExactPoly(const Series& a, const PolyT& p);

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);

/* The rational-coefficient building blocks for the closed-form checks:
     EXPS(p,s) = sum_n  p^n s^n x^n / n!          (exp(s*x) when p = 1)
     EVEN(p,s) = sum_m  p^m s^{2m} x^{2m} / (2m)! (cosh(s*x*sqrt(p)))
     ODD(p,s)  = sum_m  p^m s^{2m+1} x^{2m+1} / (2m+1)!
     EULS(p,s) = sum_n  E_n p^n s^n x^n / n!      (sec + tan of s*x when p = 1)
   ODD is sinh(s*x*sqrt(p))/sqrt(p) scaled so that everything stays rational:
   EVEN^2 - p*ODD^2 = 1. */
enum class BuiltinKind { EXPS, EVEN, ODD, EULS };

Series builtinSeries(BuiltinKind kind, const PolyT& p, const Rational& s, int N);

BuiltinKind builtinKindFromName(const std::string& name);
std::string builtinKindName(BuiltinKind kind);

/* One line per x-degree: "n: <poly>". */
std::string seriesToString(const Series& a);

} // namespace runcount

#endif
