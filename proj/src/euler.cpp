#include "runcount/euler.hpp"

namespace runcount {

EulerTable eulerNumbers(int N) {
    /* Entringer triangle: T(0,0) = 1, T(n,0) = 0, T(n,k) = T(n,k-1) + T(n-1,n-k);
       the zigzag number E_n is the last entry of row n. */
    EulerTable table;
    table.values.reserve(static_cast<std::size_t>(N) + 1);
    std::vector<BigInt> row{1};
    table.values.push_back(1);
    for (int n = 1; n <= N; ++n) {
        std::vector<BigInt> next(static_cast<std::size_t>(n) + 1, 0);
        for (int k = 1; k <= n; ++k)
            next[static_cast<std::size_t>(k)] =
                next[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(n - k)];
        row = std::move(next);
        table.values.push_back(row.back());
    }
    return table;
}

} // namespace runcount
