#pragma once

#include <vector>

#include "conint/rational.hpp"

namespace conint {

// Taylor coefficients c_m of (1/sqrt(1-x) - 1)/x = sum_m c_m x^m, exact:
// c_m = C(2m+2, m+1) / 4^(m+1).  With x = r^2 this is the radial density
// profile of the rotation-chart measure up to the 1/(8 pi^2) normalisation.
inline std::vector<Rational> measure_series(int k_max) {
    if (k_max < 0) throw std::domain_error("measure_series: negative order");
    std::vector<Rational> c;
    c.reserve(k_max + 1);
    for (long m = 0; m <= k_max; ++m)
        c.emplace_back(binomial(2 * m + 2, m + 1), ipow(BigInt(4), m + 1));
    return c;
}

}  // namespace conint
