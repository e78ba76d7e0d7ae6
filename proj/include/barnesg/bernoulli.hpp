#ifndef BARNESG_BERNOULLI_HPP
#define BARNESG_BERNOULLI_HPP

#include <barnesg/rational.hpp>

namespace barnesg {

/*
 * n-th Bernoulli number under the B_1 = -1/2 convention, computed from the
 * defining recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0 and memoized in a
 * grow-only cache. Safe for concurrent callers.
 */
const BigRational& bernoulli(unsigned long n);

struct ZetaEven {
    BigRational rational_part; // q with zeta(2k) = q * pi^(2k)
    unsigned long pi_power;    // 2k
};

/// Exact zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!), as (q, 2k).
ZetaEven zeta_even_exact(unsigned long k);

} // namespace barnesg

#endif
