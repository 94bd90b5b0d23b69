#ifndef RUNCOUNT_POLY_HPP
#define RUNCOUNT_POLY_HPP

#include "runcount/rational.hpp"

#include <string>
#include <vector>

namespace runcount {

/* Dense univariate polynomial in t over the rationals, the coefficient ring
   for all series.  coeffs[k] is the coefficient of t^k; the zero polynomial
   is the empty vector and otherwise the last stored coefficient is nonzero. */
struct PolyT {
    std::vector<Rational> coeffs;

    PolyT() = default;
    explicit PolyT(std::vector<Rational> c) : coeffs(std::move(c)) { normalize(); }
    PolyT(const Rational& c) : coeffs{c} { normalize(); } // NOLINT(google-explicit-constructor)
    PolyT(int c) : PolyT(Rational(c)) {}                  // NOLINT(google-explicit-constructor)

    /* Drop trailing zero coefficients to restore the representation invariant. */
    void normalize();

    bool isZero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; } // -1 for zero
    Rational coeff(int k) const;

    /* c * t^k */
    static PolyT monomial(const Rational& c, int k);
    static PolyT t() { return monomial(1, 1); }

    Rational evalAt(const Rational& t) const;

    bool operator==(const PolyT& o) const { return coeffs == o.coeffs; }
    bool operator!=(const PolyT& o) const { return !(*this == o); }
};

enum class PolyOp { Add, Sub, Mul };

PolyT polyArith(const PolyT& a, const PolyT& b, PolyOp op);

/* Exact quotient; throws InexactDivision unless b is a nonzero exact divisor. */
PolyT polyDivExact(const PolyT& a, const PolyT& b);

PolyT operator+(const PolyT& a, const PolyT& b);
PolyT operator-(const PolyT& a, const PolyT& b);
PolyT operator*(const PolyT& a, const PolyT& b);
PolyT operator-(const PolyT& a);

/* Human form, e.g. "4 + 2*t - t^2"; "0" for the zero polynomial. */
std::string polyToString(const PolyT& p);

/* Comma-separated ascending coefficients, e.g. "4,2"; "" for zero -> "0". */
std::string polyToCsv(const PolyT& p);

/* Inverse of polyToString; also accepts bare rationals and forms like
   "t^2", "-t", "3/2*t^3". */
PolyT parsePolyT(const std::string& text);

} // namespace runcount

#endif
