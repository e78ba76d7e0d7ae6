#ifndef BARNESG_SERIES_HPP
#define BARNESG_SERIES_HPP

#include <barnesg/rational.hpp>

#include <vector>

namespace barnesg {

/*
 * Dense truncated formal power series over BigRational. A series of
 * truncation order N stores coefficients 0..N; higher terms are O(x^{N+1}).
 * Binary operations require equal truncation orders.
 */
class RationalSeries {
public:
    explicit RationalSeries(unsigned long truncation_order)
        : coeffs_(truncation_order + 1, BigRational(0)) {}

    explicit RationalSeries(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("RationalSeries: empty coefficient list");
    }

    unsigned long truncation_order() const { return coeffs_.size() - 1; }

    const BigRational& coeff(unsigned long n) const { return coeffs_.at(n); }
    void set_coeff(unsigned long n, BigRational v) { coeffs_.at(n) = std::move(v); }

    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    RationalSeries truncated(unsigned long order) const;

    friend bool operator==(const RationalSeries& a, const RationalSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<BigRational> coeffs_;
};

/// Cauchy product; operands must share the truncation order.
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);

/// exp(a) for a with zero constant term, via n E_n = sum_k k a_k E_{n-k}.
RationalSeries series_exp(const RationalSeries& a);

/// Formal logarithm of a series with constant term 1.
RationalSeries series_log(const RationalSeries& a);

/// a^e = exp(e log(a)) for a with constant term 1 and rational e.
RationalSeries series_pow(const RationalSeries& a, const BigRational& e);

} // namespace barnesg

#endif
