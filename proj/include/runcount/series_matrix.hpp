#ifndef RUNCOUNT_SERIES_MATRIX_HPP
#define RUNCOUNT_SERIES_MATRIX_HPP

#include "runcount/series.hpp"

#include <vector>

namespace runcount {

/* Square matrix over Series, all entries sharing one bound.  Vertices of run
   networks are 1-based, so accessors take 1-based indices.  Dimension is
   capped at 16 -- the largest network anyone needs here has 5 vertices. */
struct SeriesMatrix {
    int m = 0;
    int bound = 0;
    std::vector<Series> entries; // row-major, (i-1)*m + (j-1)

    static constexpr int kMaxDim = 16;

    SeriesMatrix() = default;
    SeriesMatrix(int dim, int N);

    static SeriesMatrix identity(int dim, int N);

    const Series& at(int i, int j) const;
    Series& at(int i, int j);

    bool operator==(const SeriesMatrix& o) const {
        return m == o.m && bound == o.bound && entries == o.entries;
    }
};

SeriesMatrix matMul(const SeriesMatrix& a, const SeriesMatrix& b);
SeriesMatrix matAdd(const SeriesMatrix& a, const SeriesMatrix& b);

/* Exact inverse up to the bound, solved degree-by-degree from the inverse of
   the constant-term matrix.  Requires every constant term to be a plain
   rational and the resulting rational matrix to be nonsingular; otherwise
   SingularConstantTerm. */
SeriesMatrix matInverse(const SeriesMatrix& a);

/* Independent second route for matrices of the form I + W where every entry
   of W has zero constant term: the truncated Neumann sum sum_{k<=N} (-W)^k.
   Used as a cross-check against matInverse. */
SeriesMatrix matInverseNeumann(const SeriesMatrix& a);

/* Entrywise scaleCoeffs. */
SeriesMatrix matScaleCoeffs(const SeriesMatrix& a, const std::function<Rational(int)>& mu);

} // namespace runcount

#endif
