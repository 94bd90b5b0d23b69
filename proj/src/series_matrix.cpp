#include "runcount/series_matrix.hpp"

#include "runcount/errors.hpp"

namespace runcount {

SeriesMatrix::SeriesMatrix(int dim, int N) : m(dim), bound(N) {
    if (dim < 1 || dim > kMaxDim)
        throw DimensionMismatch("matrix dimension " + std::to_string(dim) +
                                " outside 1.." + std::to_string(kMaxDim));
    entries.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Series(N));
}

SeriesMatrix SeriesMatrix::identity(int dim, int N) {
    SeriesMatrix a(dim, N);
    for (int i = 1; i <= dim; ++i) a.at(i, i) = Series::one(N);
    return a;
}

const Series& SeriesMatrix::at(int i, int j) const {
    return entries.at(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m) +
                      static_cast<std::size_t>(j - 1));
}

Series& SeriesMatrix::at(int i, int j) {
    return entries.at(static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m) +
                      static_cast<std::size_t>(j - 1));
}

namespace {

void requireCompatible(const SeriesMatrix& a, const SeriesMatrix& b, const char* what) {
    if (a.m != b.m || a.bound != b.bound)
        throw DimensionMismatch(std::string(what) + ": matrices are " + std::to_string(a.m) +
                                "x" + std::to_string(a.m) + " @N=" + std::to_string(a.bound) +
                                " vs " + std::to_string(b.m) + "x" + std::to_string(b.m) +
                                " @N=" + std::to_string(b.bound));
}

} // namespace

SeriesMatrix matMul(const SeriesMatrix& a, const SeriesMatrix& b) {
    requireCompatible(a, b, "matMul");
    SeriesMatrix r(a.m, a.bound);
    for (int i = 1; i <= a.m; ++i)
        for (int j = 1; j <= a.m; ++j) {
            Series acc(a.bound);
            for (int k = 1; k <= a.m; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

SeriesMatrix matAdd(const SeriesMatrix& a, const SeriesMatrix& b) {
    requireCompatible(a, b, "matAdd");
    SeriesMatrix r(a.m, a.bound);
    for (std::size_t e = 0; e < r.entries.size(); ++e)
        r.entries[e] = a.entries[e] + b.entries[e];
    return r;
}

namespace {

/* Inverse of an m x m rational matrix by Gauss-Jordan elimination. */
std::vector<std::vector<Rational>> rationalInverse(std::vector<std::vector<Rational>> a) {
    const std::size_t m = a.size();
    std::vector<std::vector<Rational>> inv(m, std::vector<Rational>(m, 0));
    for (std::size_t i = 0; i < m; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m)
            throw SingularConstantTerm("constant-term matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational d = a[col][col];
        for (std::size_t j = 0; j < m; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t row = 0; row < m; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col];
            for (std::size_t j = 0; j < m; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

SeriesMatrix matInverse(const SeriesMatrix& a) {
    /* Extract the constant-term matrix; the recipes only ever invert matrices
       whose constant terms are rational numbers. */
    std::vector<std::vector<Rational>> c0(static_cast<std::size_t>(a.m),
                                          std::vector<Rational>(static_cast<std::size_t>(a.m)));
    for (int i = 1; i <= a.m; ++i)
        for (int j = 1; j <= a.m; ++j) {
            const PolyT& c = a.at(i, j).at(0);
            if (c.degree() > 0)
                throw SingularConstantTerm("constant term of entry (" + std::to_string(i) + "," +
                                           std::to_string(j) + ") is not a rational: " +
                                           polyToString(c));
            c0[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = c.coeff(0);
        }
    const auto inv0 = rationalInverse(c0);

    /* Solve A * B = I degree by degree: B_d = -A0^{-1} * sum_{k>=1} A_k B_{d-k},
       with B_0 = A0^{-1}. */
    SeriesMatrix b(a.m, a.bound);
    for (int i = 1; i <= a.m; ++i)
        for (int j = 1; j <= a.m; ++j)
            b.at(i, j).at(0) =
                PolyT(inv0[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);

    for (int d = 1; d <= a.bound; ++d) {
        /* rhs = sum_{k=1..d} A_k * B_{d-k}, an m x m matrix of PolyT */
        std::vector<std::vector<PolyT>> rhs(static_cast<std::size_t>(a.m),
                                            std::vector<PolyT>(static_cast<std::size_t>(a.m)));
        for (int k = 1; k <= d; ++k)
            for (int i = 1; i <= a.m; ++i)
                for (int j = 1; j <= a.m; ++j) {
                    PolyT acc;
                    for (int l = 1; l <= a.m; ++l) {
                        const PolyT& left = a.at(i, l).at(k);
                        if (left.isZero()) continue;
                        acc = acc + left * b.at(l, j).at(d - k);
                    }
                    auto& cell = rhs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                    cell = cell + acc;
                }
        for (int i = 1; i <= a.m; ++i)
            for (int j = 1; j <= a.m; ++j) {
                PolyT acc;
                for (int l = 1; l <= a.m; ++l) {
                    const Rational& c =
                        inv0[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)];
                    if (c == 0) continue;
                    acc = acc + PolyT(c) * rhs[static_cast<std::size_t>(l - 1)]
                                              [static_cast<std::size_t>(j - 1)];
                }
                b.at(i, j).at(d) = -acc;
            }
    }
    return b;
}

SeriesMatrix matInverseNeumann(const SeriesMatrix& a) {
    /* a must be I + W with val(W) >= 1 */
    SeriesMatrix w = a;
    for (int i = 1; i <= a.m; ++i)
        for (int j = 1; j <= a.m; ++j) {
            PolyT expect = (i == j) ? PolyT(1) : PolyT();
            if (w.at(i, j).at(0) != expect)
                throw Error("matInverseNeumann: matrix is not I + W with zero-constant-term W");
            w.at(i, j).at(0) = PolyT();
        }
    SeriesMatrix sum = SeriesMatrix::identity(a.m, a.bound);
    SeriesMatrix power = SeriesMatrix::identity(a.m, a.bound);
    for (int k = 1; k <= a.bound; ++k) {
        power = matMul(power, w);
        /* (-W)^k = (-1)^k W^k */
        SeriesMatrix term = power;
        if (k % 2 == 1)
            for (auto& s : term.entries) s = Series(a.bound) - s;
        sum = matAdd(sum, term);
    }
    return sum;
}

SeriesMatrix matScaleCoeffs(const SeriesMatrix& a, const std::function<Rational(int)>& mu) {
    SeriesMatrix r(a.m, a.bound);
    for (std::size_t e = 0; e < r.entries.size(); ++e) r.entries[e] = scaleCoeffs(a.entries[e], mu);
    return r;
}

} // namespace runcount
