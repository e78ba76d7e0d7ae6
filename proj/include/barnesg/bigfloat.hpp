#ifndef BARNESG_BIGFLOAT_HPP
#define BARNESG_BIGFLOAT_HPP

#include <barnesg/rational.hpp>

#include <mpfr.h>

#include <string>

namespace barnesg {

/*
 * Arbitrary-precision binary float over MPFR. Every value carries its own
 * precision; all operations round to nearest (ties to even). Mixing two
 * precisions in a binary operation yields the larger one.
 */
class BigFloat {
public:
    static constexpr unsigned long kMinPrec = MPFR_PREC_MIN;

    BigFloat() : BigFloat(64UL) {}
    explicit BigFloat(unsigned long precision_bits) {
        mpfr_init2(v_, prec_clamp(precision_bits));
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, kMinPrec);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(long v, unsigned long precision_bits);
    static BigFloat from(double v, unsigned long precision_bits);
    static BigFloat from(const BigInt& v, unsigned long precision_bits);
    static BigFloat from(const BigRational& v, unsigned long precision_bits);
    static BigFloat from_string(const std::string& s, unsigned long precision_bits);
    static BigFloat pi(unsigned long precision_bits);
    /// 2^e at the given precision (exact).
    static BigFloat pow2(long e, unsigned long precision_bits);

    unsigned long precision() const { return static_cast<unsigned long>(mpfr_get_prec(v_)); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Exponent e with |x| in [2^(e-1), 2^e); only valid for nonzero finite x.
    long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /*
     * Scientific-notation decimal string with exactly `digits` significant
     * digits, correctly rounded (half to even), e.g. "-3.14159e0". Zero
     * prints as "0".
     */
    std::string to_sci_string(unsigned long digits) const;

    BigFloat operator-() const;
    BigFloat abs() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    // In-place variants that keep this value's precision; used in hot loops.
    void add_(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); }
    void sub_(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); }
    void mul_(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); }
    void div_(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); }
    void mul_ui_(unsigned long u) { mpfr_mul_ui(v_, v_, u, MPFR_RNDN); }
    void div_ui_(unsigned long u) { mpfr_div_ui(v_, v_, u, MPFR_RNDN); }

    friend int cmp(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
    friend int cmp_abs(const BigFloat& a, const BigFloat& b) { return mpfr_cmpabs(a.v_, b.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat log(const BigFloat& x);
    friend BigFloat log1p(const BigFloat& x);
    friend BigFloat exp(const BigFloat& x);
    friend BigFloat pow_ui(const BigFloat& base, unsigned long e);
    friend BigFloat gamma(const BigFloat& x);

    /// Rounds to a copy with the given precision.
    BigFloat rounded_to(unsigned long precision_bits) const;

    /// (x)_i at this value's precision; overload needed because the generic
    /// template would read T(1) as a precision request.
    friend BigFloat falling_factorial(const BigFloat& x, unsigned long i);

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    static mpfr_prec_t prec_clamp(unsigned long p) {
        return p < kMinPrec ? static_cast<mpfr_prec_t>(kMinPrec) : static_cast<mpfr_prec_t>(p);
    }

    mpfr_t v_;
};

} // namespace barnesg

#endif
