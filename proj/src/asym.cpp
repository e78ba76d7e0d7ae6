#include <barnesg/asym.hpp>

#include <barnesg/bernoulli.hpp>
#include <barnesg/coeffs.hpp>
#include <barnesg/stirling.hpp>

#include <stdexcept>

namespace barnesg {

namespace {

BigFloat zeta_even_float(unsigned long k, unsigned long precision) {
    const ZetaEven z = zeta_even_exact(k);
    return BigFloat::from(z.rational_part, precision) *
           pow_ui(BigFloat::pi(precision), z.pi_power);
}

BigFloat i_kn(unsigned long k, unsigned long n, const BigRational& r, const BigFloat& pi,
              unsigned long precision) {
    if (k == 0)
        return BigFloat::from(BigRational(1, 4), precision);
    BigFloat lead = BigFloat::from(gamma_stirling(k), precision);
    lead.div_(BigFloat::pow2(static_cast<long>(k) + 2, precision));
    BigFloat inner(precision);
    for (unsigned long j = 1; j <= k; ++j) {
        for (unsigned long nu = 1; nu <= (j + 1) / 2; ++nu) {
            const BigInt s = stirling2(j - 1, 2 * nu - 2);
            if (s == 0)
                continue;
            BigRational exact = bn_exact(nu, r) * gamma_stirling(k - j) * BigRational(s);
            if (nu % 2)
                exact = -exact;
            BigFloat term = BigFloat::from(exact, precision);
            term.mul_(pow_ui(pi, 2 * nu));
            term.mul_(BigFloat::pow2(2 * static_cast<long>(nu) - static_cast<long>(k) - 2,
                                     precision));
            inner.add_(term);
        }
    }
    inner.div_ui_(2 * n - 1);
    return lead + inner;
}

} // namespace

BigFloat bn_tail_approx(unsigned long n, const BigRational& r, unsigned long m,
                        unsigned long precision) {
    if (m < 1 || m > n - 1 || n < 2)
        throw std::domain_error("bn_tail_approx: need 1 <= m <= n-1");
    BigFloat sum(precision);
    for (unsigned long k = 0; k < m; ++k) {
        const unsigned long i = 2 * n - 2 * k;
        const BigRational term = bn_exact(k, r) * r * bernoulli(i + 2) /
                                 BigRational(BigInt(i) * BigInt(i + 1) * BigInt(i + 2));
        sum.add_(BigFloat::from(term, precision));
    }
    return sum;
}

BigFloat bn_full_asym(unsigned long n, const BigRational& r, unsigned long k_max,
                      unsigned long precision, bool with_zeta_factor) {
    if (n < 2)
        throw std::domain_error("bn_full_asym: n must be >= 2");
    const BigFloat pi = BigFloat::pi(precision);
    const BigFloat nm1 = BigFloat::from(static_cast<long>(n) - 1, precision);

    // (-1)^n r (2n-1) ((n-1)/(pi e))^(2n-2) sqrt((n-1)/pi^7)
    BigFloat pref = BigFloat::from(r * BigRational(BigInt(2 * n - 1)), precision);
    if (n % 2)
        pref = -pref;
    BigFloat base = nm1 / (pi * exp(BigFloat::from(1L, precision)));
    pref.mul_(pow_ui(base, 2 * n - 2));
    pref.mul_(sqrt(nm1 / pow_ui(pi, 7)));

    BigFloat sum(precision);
    BigFloat scale = BigFloat::from(1L, precision);
    for (unsigned long k = 0; k <= k_max; ++k) {
        sum.add_(i_kn(k, n, r, pi, precision) * scale);
        scale.div_(nm1);
    }
    BigFloat result = pref * sum;
    if (with_zeta_factor)
        result.mul_(zeta_even_float(n + 1, precision));
    return result;
}

BigFloat leading_predictor(unsigned long n, const BigRational& scale, unsigned long precision) {
    if (n == 0)
        throw std::domain_error("leading_predictor: n must be >= 1");
    BigRational q = BigRational(2) * scale * BigRational(factorial(2 * n - 1));
    if (n % 2)
        q = -q;
    return BigFloat::from(q, precision) /
           pow_ui(BigFloat::from(2L, precision) * BigFloat::pi(precision), 2 * n + 2);
}

BernoulliBounds bernoulli_bounds_check(unsigned long n, unsigned long precision) {
    BernoulliBounds out;
    const BigFloat two_pi_pow =
        pow_ui(BigFloat::from(2L, precision) * BigFloat::pi(precision), 2 * n + 2);
    out.lower = BigFloat::from(2 * factorial(2 * n + 2), precision) / two_pi_pow;
    out.upper = BigFloat::from(4 * factorial(2 * n + 2), precision) / two_pi_pow;
    out.value = BigFloat::from(bernoulli(2 * n + 2).abs(), precision);
    out.holds = out.lower < out.value && out.value < out.upper;
    return out;
}

BigFloat zeta_ratio_factor(unsigned long n, unsigned long k, unsigned long precision) {
    if (k >= n)
        throw std::domain_error("zeta_ratio_factor: need k < n");
    const ZetaEven num = zeta_even_exact(n - k + 1);
    const ZetaEven den = zeta_even_exact(n + 1);
    // ratio = (q_num / q_den) * pi^(2(n-k+1) - 2(n+1)) = (q_num / q_den) / pi^(2k)
    return BigFloat::from(num.rational_part / den.rational_part, precision) /
           pow_ui(BigFloat::pi(precision), 2 * k);
}

ApproxReport make_report(unsigned long n, const BigRational& r, ApproxFormula formula,
                         unsigned long order_param, unsigned long precision) {
    ApproxReport rep;
    rep.n = n;
    rep.formula = formula;
    rep.r = r;
    rep.order_param = order_param;
    rep.precision_bits = precision;
    rep.exact = BigFloat::from(bn_exact(n, r), precision);
    switch (formula) {
    case ApproxFormula::TailM:
        rep.approx = bn_tail_approx(n, r, order_param, precision);
        break;
    case ApproxFormula::FullAsym:
        rep.approx = bn_full_asym(n, r, order_param, precision);
        break;
    case ApproxFormula::Leading:
        rep.approx = leading_predictor(n, r, precision);
        break;
    }
    if (rep.exact.is_zero())
        rep.rel_error = (rep.approx - rep.exact).abs();
    else
        rep.rel_error = ((rep.exact - rep.approx) / rep.exact).abs();
    return rep;
}

} // namespace barnesg
