#ifndef RUNCOUNT_EULER_HPP
#define RUNCOUNT_EULER_HPP

#include "runcount/rational.hpp"

#include <vector>

namespace runcount {

/* E_0..E_N with E_n = n! * [x^n](sec x + tan x): 1, 1, 1, 2, 5, 16, 61, ... */
struct EulerTable {
    std::vector<BigInt> values;

    const BigInt& at(int n) const { return values.at(static_cast<std::size_t>(n)); }
    int maxIndex() const { return static_cast<int>(values.size()) - 1; }
};

/* Computed by the boustrophedon (Entringer) recurrence, all-integer. */
EulerTable eulerNumbers(int N);

} // namespace runcount

#endif
