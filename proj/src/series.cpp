#include <barnesg/series.hpp>

namespace barnesg {

RationalSeries RationalSeries::truncated(unsigned long order) const {
    RationalSeries r(order);
    for (unsigned long n = 0; n <= order && n <= truncation_order(); ++n)
        r.set_coeff(n, coeff(n));
    return r;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
    if (a.truncation_order() != b.truncation_order())
        throw std::invalid_argument("series_mul: mismatched truncation orders");
    const unsigned long N = a.truncation_order();
    RationalSeries c(N);
    for (unsigned long n = 0; n <= N; ++n) {
        BigRational s(0);
        for (unsigned long k = 0; k <= n; ++k) {
            if (a.coeff(k).is_zero() || b.coeff(n - k).is_zero())
                continue;
            s += a.coeff(k) * b.coeff(n - k);
        }
        c.set_coeff(n, std::move(s));
    }
    return c;
}

RationalSeries series_exp(const RationalSeries& a) {
    if (!a.coeff(0).is_zero())
        throw std::invalid_argument("series_exp: constant term must be 0");
    const unsigned long N = a.truncation_order();
    RationalSeries e(N);
    e.set_coeff(0, BigRational(1));
    for (unsigned long n = 1; n <= N; ++n) {
        BigRational s(0);
        for (unsigned long k = 1; k <= n; ++k) {
            if (a.coeff(k).is_zero())
                continue;
            s += BigRational(static_cast<long>(k)) * a.coeff(k) * e.coeff(n - k);
        }
        e.set_coeff(n, s / BigRational(static_cast<long>(n)));
    }
    return e;
}

RationalSeries series_log(const RationalSeries& a) {
    if (a.coeff(0) != BigRational(1))
        throw std::invalid_argument("series_log: constant term must be 1");
    const unsigned long N = a.truncation_order();
    // a' = b' a  =>  n a_n = sum_{k=1}^{n} k b_k a_{n-k}
    RationalSeries b(N);
    for (unsigned long n = 1; n <= N; ++n) {
        BigRational s = BigRational(static_cast<long>(n)) * a.coeff(n);
        for (unsigned long k = 1; k < n; ++k) {
            if (b.coeff(k).is_zero() || a.coeff(n - k).is_zero())
                continue;
            s -= BigRational(static_cast<long>(k)) * b.coeff(k) * a.coeff(n - k);
        }
        b.set_coeff(n, s / BigRational(static_cast<long>(n)));
    }
    return b;
}

RationalSeries series_pow(const RationalSeries& a, const BigRational& e) {
    RationalSeries l = series_log(a);
    for (unsigned long n = 0; n <= l.truncation_order(); ++n)
        if (!l.coeff(n).is_zero())
            l.set_coeff(n, e * l.coeff(n));
    return series_exp(l);
}

} // namespace barnesg
