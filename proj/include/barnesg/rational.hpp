#ifndef BARNESG_RATIONAL_HPP
#define BARNESG_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace barnesg {

using BigInt = mpz_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt double_factorial(unsigned long n) {
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/*
 * Exact rational number on top of GMP. Kept canonical at all times:
 * denominator > 0 and gcd(|num|, den) = 1. Division by zero throws
 * instead of trapping inside GMP.
 */
class BigRational {
public:
    BigRational() : v_(0) {}
    BigRational(int n) : v_(n) {}
    BigRational(long n) : v_(n) {}
    BigRational(unsigned long n) : v_(static_cast<unsigned long>(n)) {}
    BigRational(const BigInt& n) : v_(n) {}

    BigRational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("BigRational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    // Accepts "p", "p/q" or base-10 strings understood by GMP.
    explicit BigRational(const std::string& s) : v_(s) {
        if (v_.get_den() == 0)
            throw std::domain_error("BigRational: zero denominator");
        v_.canonicalize();
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return BigRational(mpq_class(-v_), RawTag{}); }

    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero())
            throw std::domain_error("BigRational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    BigRational abs() const {
        mpq_class r;
        mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
        return BigRational(std::move(r), RawTag{});
    }

    BigRational inverse() const {
        if (is_zero())
            throw std::domain_error("BigRational: inverse of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
        return BigRational(std::move(r), RawTag{});
    }

    // "p/q", or just "p" for integers.
    std::string to_string() const { return v_.get_str(); }

private:
    struct RawTag {};
    BigRational(mpq_class q, RawTag) : v_(std::move(q)) {}
    mpq_class v_;
};

inline BigRational pow_int(const BigRational& base, long e) {
    if (e >= 0) {
        BigRational r(pow_int(base.numerator(), static_cast<unsigned long>(e)),
                      pow_int(base.denominator(), static_cast<unsigned long>(e)));
        return r;
    }
    return pow_int(base.inverse(), -e);
}

/// (x)_i = x(x-1)...(x-i+1), with (x)_0 = 1.
template <typename T>
T falling_factorial(const T& x, unsigned long i) {
    T r(1);
    T f(x);
    for (unsigned long j = 0; j < i; ++j) {
        r *= f;
        f -= T(1);
    }
    return r;
}

} // namespace barnesg

#endif
