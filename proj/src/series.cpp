#include "runcount/series.hpp"

#include "runcount/errors.hpp"
#include "runcount/euler.hpp"

namespace runcount {

Series Series::constant(const PolyT& c, int N) {
    Series s(N);
    s.at(0) = c;
    return s;
}

Series Series::monomialX(int power, const PolyT& c, int N) {
    Series s(N);
    if (power <= N) s.at(power) = c;
    return s;
}

namespace {

void requireSameBound(const Series& a, const Series& b, const char* what) {
    if (a.bound != b.bound)
        throw BoundMismatch(std::string(what) + ": series bounds " +
                            std::to_string(a.bound) + " and " + std::to_string(b.bound) +
                            " differ");
}

} // namespace

Series seriesArith(const Series& a, const Series& b, SeriesOp op) {
    requireSameBound(a, b, "seriesArith");
    Series r(a.bound);
    if (op == SeriesOp::Mul) {
        for (int i = 0; i <= a.bound; ++i) {
            if (a.at(i).isZero()) continue;
            for (int j = 0; i + j <= a.bound; ++j) {
                if (b.at(j).isZero()) continue;
                r.at(i + j) = r.at(i + j) + a.at(i) * b.at(j);
            }
        }
    } else {
        for (int n = 0; n <= a.bound; ++n)
            r.at(n) = (op == SeriesOp::Add) ? a.at(n) + b.at(n) : a.at(n) - b.at(n);
    }
    return r;
}

Series seriesRecip(const Series& a) {
    const PolyT& c0 = a.at(0);
    if (c0.isZero() || c0.degree() != 0)
        throw NonUnitConstantTerm("seriesRecip: constant term '" + polyToString(c0) +
                                  "' is not a nonzero rational");
    const Rational inv0 = Rational(1) / c0.coeff(0);
    /* recursive convolution: b_n = -(1/a_0) * sum_{k=1..n} a_k b_{n-k} */
    Series b(a.bound);
    b.at(0) = PolyT(inv0);
    for (int n = 1; n <= a.bound; ++n) {
        PolyT acc;
        for (int k = 1; k <= n; ++k)
            if (!a.at(k).isZero()) acc = acc + a.at(k) * b.at(n - k);
        b.at(n) = PolyT(-inv0) * acc;
    }
    return b;
}

Series scaleCoeffs(const Series& a, const std::function<Rational(int)>& mu) {
    Series r(a.bound);
    for (int n = 0; n <= a.bound; ++n) r.at(n) = PolyT(mu(n)) * a.at(n);
    return r;
}

Series seriesDivExactPoly(const Series& a, const PolyT& p) {
    Series r(a.bound);
    for (int n = 0; n <= a.bound; ++n)
        if (!a.at(n).isZero()) r.at(n) = polyDivExact(a.at(n), p);
    return r;
}

Series operator+(const Series& a, const Series& b) { return seriesArith(a, b, SeriesOp::Add); }
Series operator-(const Series& a, const Series& b) { return seriesArith(a, b, SeriesOp::Sub); }
Series operator*(const Series& a, const Series& b) { return seriesArith(a, b, SeriesOp::Mul); }

Series builtinSeries(BuiltinKind kind, const PolyT& p, const Rational& s, int N) {
    Series r(N);
    EulerTable euler;
    if (kind == BuiltinKind::EULS) euler = eulerNumbers(N);

    PolyT pPow(1);    // p^n (EXPS/EULS) or p^m (EVEN/ODD)
    Rational sPow(1); // s^n
    BigInt fact(1);   // n!
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            sPow *= s;
            fact *= n;
        }
        switch (kind) {
        case BuiltinKind::EXPS:
            r.at(n) = pPow * PolyT(sPow / Rational(fact));
            pPow = pPow * p;
            break;
        case BuiltinKind::EULS:
            r.at(n) = pPow * PolyT(Rational(euler.at(n)) * sPow / Rational(fact));
            pPow = pPow * p;
            break;
        case BuiltinKind::EVEN:
            if (n % 2 == 0) {
                r.at(n) = pPow * PolyT(sPow / Rational(fact));
                pPow = pPow * p;
            }
            break;
        case BuiltinKind::ODD:
            if (n % 2 == 1) {
                r.at(n) = pPow * PolyT(sPow / Rational(fact));
                pPow = pPow * p;
            }
            break;
        }
    }
    return r;
}

BuiltinKind builtinKindFromName(const std::string& name) {
    if (name == "EXPS") return BuiltinKind::EXPS;
    if (name == "EVEN") return BuiltinKind::EVEN;
    if (name == "ODD") return BuiltinKind::ODD;
    if (name == "EULS") return BuiltinKind::EULS;
    throw SchemaError("unknown builtin series kind '" + name + "'");
}

std::string builtinKindName(BuiltinKind kind) {
    switch (kind) {
    case BuiltinKind::EXPS: return "EXPS";
    case BuiltinKind::EVEN: return "EVEN";
    case BuiltinKind::ODD: return "ODD";
    case BuiltinKind::EULS: return "EULS";
    }
    return "?";
}

std::string seriesToString(const Series& a) {
    std::string out;
    for (int n = 0; n <= a.bound; ++n)
        out += std::to_string(n) + ": " + polyToString(a.at(n)) + "\n";
    return out;
}

} // namespace runcount
