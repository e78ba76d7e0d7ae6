#ifndef BARNESG_STIRLING_HPP
#define BARNESG_STIRLING_HPP

#include <barnesg/rational.hpp>

namespace barnesg {

/*
 * Stirling numbers of both kinds, stored as full triangles grown on demand.
 * Arguments outside 0 <= k <= n return 0, which keeps ragged double sums
 * simple at the call sites.
 */

/// S(nu, k), second kind, via S(nu,k) = k S(nu-1,k) + S(nu-1,k-1).
BigInt stirling2(unsigned long nu, unsigned long k);

/// Signed s(n, nu), first kind, via s(n,nu) = s(n-1,nu-1) - (n-1) s(n-1,nu).
BigInt stirling1_signed(unsigned long n, unsigned long nu);

/// Explicit sum S(nu,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^nu.
BigInt stirling2_explicit(unsigned long nu, unsigned long k);

// The same sum with the sign factor (-1)^k in place of (-1)^j. Not a valid
// identity; retained so tests can document the discrepancy. May be
// non-integral, hence the rational return type.
BigRational stirling2_explicit_printed_variant(unsigned long nu, unsigned long k);

} // namespace barnesg

#endif
