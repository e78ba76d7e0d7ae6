#ifndef BARNESG_ASYM_HPP
#define BARNESG_ASYM_HPP

#include <barnesg/bigfloat.hpp>
#include <barnesg/rational.hpp>

namespace barnesg {

enum class ApproxFormula {
    TailM,    // truncated Bernoulli tail
    FullAsym, // (n-1)^{-k} series with I_{k,n}(r)
    Leading,  // closed-form leading-order predictor
};

/*
 * One exact-vs-approximate comparison: the exact value (rendered to float at
 * the comparison precision), the approximation, and the relative error
 * |exact - approx| / |exact|.
 */
struct ApproxReport {
    unsigned long n = 0;
    ApproxFormula formula = ApproxFormula::TailM;
    BigRational r;
    unsigned long order_param = 0; // m for TailM, k_max for FullAsym
    BigFloat exact;
    BigFloat approx;
    BigFloat rel_error;
    unsigned long precision_bits = 0;
};

struct BernoulliBounds {
    BigFloat lower;
    BigFloat value; // |B_{2n+2}|
    BigFloat upper;
    bool holds = false;
};

/*
 * Truncated-tail approximation of b_n(r):
 *   sum_{k=0}^{m-1} b_k(r) r B_{2n-2k+2} / ((2n-2k)(2n-2k+1)(2n-2k+2))
 * Requires 1 <= m <= n-1 so every Bernoulli index stays >= 4.
 */
BigFloat bn_tail_approx(unsigned long n, const BigRational& r, unsigned long m,
                        unsigned long precision);

/*
 * Full asymptotic approximation of b_n(r), n >= 2:
 *   (-1)^n r (2n-1) ((n-1)/(pi e))^(2n-2) sqrt((n-1)/pi^7)
 *       * sum_{k=0}^{k_max} I_{k,n}(r) / (n-1)^k
 * with I_{0,n} = 1/4 and, for k >= 1,
 *   I_{k,n}(r) = gamma_k/2^(k+2) + 1/(2n-1) sum_{j=1}^{k}
 *                sum_{nu=1}^{floor((j+1)/2)} (-1)^nu 2^(2nu-k-2) pi^(2nu)
 *                b_nu(r) gamma_{k-j} S(j-1, 2nu-2).
 * with_zeta_factor additionally multiplies by zeta(2n+2), the factor the
 * derivation absorbs; off by default to match the stated expansion.
 */
BigFloat bn_full_asym(unsigned long n, const BigRational& r, unsigned long k_max,
                      unsigned long precision, bool with_zeta_factor = false);

/// Leading-order predictor (-1)^n 2 scale (2n-1)! / (2 pi)^(2n+2), n >= 1.
BigFloat leading_predictor(unsigned long n, const BigRational& scale, unsigned long precision);

/// Checks 2(2n+2)!/(2pi)^(2n+2) < |B_{2n+2}| < 4(2n+2)!/(2pi)^(2n+2).
BernoulliBounds bernoulli_bounds_check(unsigned long n, unsigned long precision = 256);

/// zeta(2n-2k+2)/zeta(2n+2) from the exact even-zeta values, k < n.
BigFloat zeta_ratio_factor(unsigned long n, unsigned long k, unsigned long precision);

/// Builds the exact/approx/relative-error record for one (n, r, formula) cell.
ApproxReport make_report(unsigned long n, const BigRational& r, ApproxFormula formula,
                         unsigned long order_param, unsigned long precision);

} // namespace barnesg

#endif
