#include <barnesg/bigfloat.hpp>

#include <algorithm>
#include <stdexcept>

namespace barnesg {

namespace {

unsigned long max_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}

} // namespace

BigFloat BigFloat::from(long v, unsigned long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(double v, unsigned long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(const BigInt& v, unsigned long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_z(r.v_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from(const BigRational& v, unsigned long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_q(r.v_, v.raw().get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_string(const std::string& s, unsigned long precision_bits) {
    BigFloat r(precision_bits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("BigFloat: cannot parse \"" + s + "\"");
    return r;
}

BigFloat BigFloat::pi(unsigned long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow2(long e, unsigned long precision_bits) {
    BigFloat r(precision_bits);
    mpfr_set_ui_2exp(r.v_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
    return r;
}

std::string BigFloat::to_sci_string(unsigned long digits) const {
    if (digits == 0)
        throw std::invalid_argument("to_sci_string: digits must be positive");
    if (mpfr_nan_p(v_))
        return "nan";
    if (mpfr_inf_p(v_))
        return sign() < 0 ? "-inf" : "inf";
    if (is_zero())
        return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string digs(s);
    mpfr_free_str(s);
    std::string sign_part;
    if (!digs.empty() && digs[0] == '-') {
        sign_part = "-";
        digs.erase(0, 1);
    }
    // value = 0.d1d2... * 10^e  ->  d1.d2... e(e-1)
    std::string out = sign_part + digs.substr(0, 1);
    if (digs.size() > 1)
        out += "." + digs.substr(1);
    out += "e" + std::to_string(static_cast<long>(e) - 1);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(max_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat log(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat log1p(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_log1p(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat exp(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat pow_ui(const BigFloat& base, unsigned long e) {
    BigFloat r(base.precision());
    mpfr_pow_ui(r.v_, base.v_, e, MPFR_RNDN);
    return r;
}

BigFloat gamma(const BigFloat& x) {
    BigFloat r(x.precision());
    mpfr_gamma(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::rounded_to(unsigned long precision_bits) const {
    BigFloat r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat falling_factorial(const BigFloat& x, unsigned long i) {
    BigFloat r = BigFloat::from(1L, x.precision());
    BigFloat f = x;
    for (unsigned long j = 0; j < i; ++j) {
        r.mul_(f);
        mpfr_sub_ui(f.raw(), f.raw(), 1, MPFR_RNDN);
    }
    return r;
}

} // namespace barnesg
