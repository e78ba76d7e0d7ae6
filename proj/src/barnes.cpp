#include <barnesg/barnes.hpp>

#include <barnesg/bernoulli.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace barnesg {

namespace {

constexpr unsigned long kGuardBits = 64;

unsigned long min_argument_for(unsigned long precision) {
    return std::max<unsigned long>(10, precision / 6);
}

// Euler-Maclaurin base point; e^{-2 pi N} must undercut 2^{-prec}.
unsigned long em_base_point(unsigned long prec) {
    return std::max<unsigned long>(16, (prec * 12) / 100 + 4);
}

/*
 * Sums Bernoulli-type tails sum_n term(n) until terms stop decreasing in
 * magnitude or drop below |total| * 2^-(prec+16). Returns the count and the
 * magnitude of the last included term.
 */
template <typename TermFn>
void sum_to_smallest_term(BigFloat& total, unsigned long prec, TermFn term,
                          unsigned long& terms_used, BigFloat& last_magnitude) {
    BigFloat prev_mag(prec);
    bool have_prev = false;
    for (unsigned long n = 1;; ++n) {
        const BigFloat t = term(n);
        const BigFloat mag = t.abs();
        if (have_prev && cmp(mag, prev_mag) >= 0)
            break;
        total.add_(t);
        terms_used = n;
        last_magnitude = mag;
        prev_mag = mag;
        have_prev = true;
        if (!total.is_zero() && !mag.is_zero() &&
            mag.exponent() < total.exponent() - static_cast<long>(prec + 16))
            break;
    }
}

struct ConstantsCache {
    std::map<unsigned long, BigFloat> by_precision;
    std::mutex mutex;

    template <typename Compute>
    BigFloat get(unsigned long prec, Compute compute) {
        std::lock_guard lock(mutex);
        auto it = by_precision.find(prec);
        if (it == by_precision.end())
            it = by_precision.emplace(prec, compute()).first;
        return it->second;
    }
};

ConstantsCache g_euler_cache;
ConstantsCache g_glaisher_cache;

BigFloat euler_gamma_impl(unsigned long prec) {
    const unsigned long wp = prec + kGuardBits;
    const unsigned long N = em_base_point(wp);
    BigFloat h(wp);
    for (unsigned long i = 1; i <= N; ++i)
        h.add_(BigFloat::from(1L, wp) / BigFloat::from(static_cast<long>(i), wp));
    BigFloat g = h - log(BigFloat::from(static_cast<long>(N), wp));
    g.sub_(BigFloat::from(BigRational(1, 2 * static_cast<long>(N)), wp));
    // + sum_k B_{2k} / (2k N^{2k}) to the smallest term
    unsigned long used = 0;
    BigFloat last(wp);
    sum_to_smallest_term(
        g, wp,
        [&](unsigned long k) {
            const BigRational q = bernoulli(2 * k) /
                                  (BigRational(BigInt(2 * k)) *
                                   BigRational(pow_int(BigInt(static_cast<long>(N)), 2 * k)));
            return BigFloat::from(q, wp);
        },
        used, last);
    return g.rounded_to(prec);
}

// zeta'(2) = -sum_{n>=2} log(n)/n^2, Euler-Maclaurin tail from N.
BigFloat zeta_prime_2(unsigned long wp) {
    const unsigned long N = em_base_point(wp);
    BigFloat s(wp);
    for (unsigned long n = 2; n <= N; ++n) {
        BigFloat t = log(BigFloat::from(static_cast<long>(n), wp));
        t.div_ui_(n);
        t.div_ui_(n);
        s.add_(t);
    }
    const BigFloat logN = log(BigFloat::from(static_cast<long>(N), wp));
    const BigFloat Nf = BigFloat::from(static_cast<long>(N), wp);
    // integral int_N^inf log x / x^2 dx = (log N + 1)/N, then -f(N)/2
    BigFloat fN = logN / (Nf * Nf);
    s.add_((logN + BigFloat::from(1L, wp)) / Nf);
    s.sub_(fN / BigFloat::from(2L, wp));
    // derivative corrections: f^(m)(x) = (a_m log x + b_m)/x^(m+2),
    // a_{m+1} = -(m+2) a_m, b_{m+1} = a_m - (m+2) b_m
    std::vector<std::pair<BigInt, BigInt>> deriv{{BigInt(1), BigInt(0)}};
    auto f_deriv = [&](unsigned long m) {
        while (deriv.size() <= m) {
            const BigInt a = deriv.back().first;
            const BigInt b = deriv.back().second;
            const long mm = static_cast<long>(deriv.size()) - 1;
            deriv.emplace_back(BigInt(-(mm + 2) * a), BigInt(a - (mm + 2) * b));
        }
        const auto& [a, b] = deriv[m];
        BigFloat num = BigFloat::from(a, wp) * logN + BigFloat::from(b, wp);
        return num / pow_ui(Nf, m + 2);
    };
    unsigned long used = 0;
    BigFloat last(wp);
    BigFloat corr(wp);
    sum_to_smallest_term(
        corr, wp,
        [&](unsigned long j) {
            return -(BigFloat::from(bernoulli(2 * j), wp) / BigFloat::from(factorial(2 * j), wp)) *
                   f_deriv(2 * j - 1);
        },
        used, last);
    s.add_(corr);
    return -s;
}

BigFloat log_glaisher_impl(unsigned long prec) {
    const unsigned long wp = prec + kGuardBits;
    const BigFloat g = euler_gamma(wp);
    const BigFloat zp2 = zeta_prime_2(wp);
    const BigFloat pi = BigFloat::pi(wp);
    BigFloat r = (g + log(BigFloat::from(2L, wp) * pi)) / BigFloat::from(12L, wp);
    r.sub_(zp2 / (BigFloat::from(2L, wp) * pi * pi));
    return r.rounded_to(prec);
}

// log Gamma(y) for y >= the shift threshold, plus tail bookkeeping.
EvalResult log_gamma_large(const BigFloat& y, unsigned long wp, unsigned long out_prec) {
    EvalResult res;
    res.precision_bits = out_prec;
    const BigFloat y2 = y * y;
    BigFloat total = (y - BigFloat::from(BigRational(1, 2), wp)) * log(y) - y +
                     log(BigFloat::from(2L, wp) * BigFloat::pi(wp)) / BigFloat::from(2L, wp);
    BigFloat ypow = y; // y^(2k-1)
    res.last_term_magnitude = BigFloat(wp);
    sum_to_smallest_term(
        total, wp,
        [&](unsigned long k) {
            if (k > 1)
                ypow = ypow * y2;
            return BigFloat::from(bernoulli(2 * k) / BigRational(BigInt(2 * k) * BigInt(2 * k - 1)),
                                  wp) /
                   ypow;
        },
        res.terms_used, res.last_term_magnitude);
    res.value = std::move(total);
    return res;
}

} // namespace

BigFloat euler_gamma(unsigned long precision) {
    if (precision < 64)
        throw std::domain_error("euler_gamma: precision must be >= 64");
    return g_euler_cache.get(precision, [&] { return euler_gamma_impl(precision); });
}

BigFloat log_glaisher(unsigned long precision) {
    if (precision < 64)
        throw std::domain_error("log_glaisher: precision must be >= 64");
    return g_glaisher_cache.get(precision, [&] { return log_glaisher_impl(precision); });
}

EvalResult log_gamma(const BigFloat& z, unsigned long precision) {
    if (!z.is_finite() || z.sign() <= 0)
        throw std::domain_error("log_gamma: z must be positive");
    const unsigned long wp = precision + kGuardBits;
    const unsigned long zmin = min_argument_for(precision);
    BigFloat y = z.rounded_to(wp);
    unsigned long shift = 0;
    while (y < BigFloat::from(static_cast<long>(zmin), wp)) {
        y.add_(BigFloat::from(1L, wp));
        ++shift;
    }
    EvalResult res = log_gamma_large(y, wp, precision);
    // log Gamma(z) = log Gamma(z+s) - sum_{i=0}^{s-1} log(z+i)
    for (unsigned long i = 0; i < shift; ++i)
        res.value.sub_(log(z.rounded_to(wp) + BigFloat::from(static_cast<long>(i), wp)));
    res.value = res.value.rounded_to(precision);
    res.last_term_magnitude = res.last_term_magnitude.rounded_to(precision);
    return res;
}

EvalResult log_barnes_g_core(const BigFloat& z, unsigned long precision, double min_argument) {
    if (!z.is_finite() || z.sign() <= 0)
        throw std::domain_error("log_barnes_g: z must be positive");
    const unsigned long wp = precision + kGuardBits;
    const double zmin = min_argument > 0 ? min_argument
                                         : static_cast<double>(min_argument_for(precision));
    BigFloat zs = z.rounded_to(wp);
    const BigFloat one = BigFloat::from(1L, wp);

    // raise the argument: log G(z+1) = log G(z+s+1) - sum_{i=1}^{s} log Gamma(z+i)
    BigFloat shift_sum(wp);
    unsigned long s = 0;
    while (zs < BigFloat::from(zmin, wp)) {
        zs.add_(one);
        ++s;
    }
    if (s > 0) {
        // log Gamma(z+i) = log Gamma(z+1) + sum_{t=1}^{i-1} log(z+t)
        const EvalResult lg1 = log_gamma(z + one, wp);
        shift_sum = BigFloat::from(static_cast<long>(s), wp) * lg1.value;
        for (unsigned long t = 1; t < s; ++t)
            shift_sum.add_(BigFloat::from(static_cast<long>(s - t), wp) *
                           log(z.rounded_to(wp) + BigFloat::from(static_cast<long>(t), wp)));
    }

    EvalResult res;
    res.precision_bits = precision;
    const BigFloat logz = log(zs);
    const BigFloat lgam_z1 = log_gamma(zs + one, wp).value;
    BigFloat total = zs * zs / BigFloat::from(4L, wp) + zs * lgam_z1;
    total.sub_((zs * (zs + one) / BigFloat::from(2L, wp) +
                BigFloat::from(BigRational(1, 12), wp)) *
               logz);
    total.sub_(log_glaisher(wp));

    const BigFloat z2 = zs * zs;
    BigFloat zpow = z2; // z^(2n)
    res.last_term_magnitude = BigFloat(wp);
    sum_to_smallest_term(
        total, wp,
        [&](unsigned long n) {
            if (n > 1)
                zpow = zpow * z2;
            return BigFloat::from(bernoulli(2 * n + 2) /
                                      BigRational(BigInt(2 * n) * BigInt(2 * n + 1) *
                                                  BigInt(2 * n + 2)),
                                  wp) /
                   zpow;
        },
        res.terms_used, res.last_term_magnitude);

    total.sub_(shift_sum);
    res.value = total.rounded_to(precision);
    res.last_term_magnitude = res.last_term_magnitude.rounded_to(precision);
    return res;
}

EvalResult log_barnes_g(const BigFloat& z, unsigned long precision) {
    return log_barnes_g_core(z, precision, 0.0);
}

std::vector<BigFloat> log_g_weierstrass_checkpoints(const BigFloat& z,
                                                    std::span<const unsigned long> checkpoints,
                                                    unsigned long precision) {
    if (checkpoints.empty())
        return {};
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() == 0)
        throw std::invalid_argument("log_g_weierstrass: checkpoints must be ascending and >= 1");
    const unsigned long wp = precision + kGuardBits;
    const BigFloat zw = z.rounded_to(wp);
    if (cmp(zw, BigFloat::from(-1L, wp)) <= 0)
        throw std::domain_error("log_g_weierstrass: z must exceed -1");

    const BigFloat g = euler_gamma(wp);
    const BigFloat z2_half = zw * zw / BigFloat::from(2L, wp);
    BigFloat sum = (zw / BigFloat::from(2L, wp)) * log(BigFloat::from(2L, wp) * BigFloat::pi(wp));
    sum.sub_(zw * (zw + BigFloat::from(1L, wp)) / BigFloat::from(2L, wp));
    sum.sub_(g * z2_half);

    std::vector<BigFloat> out;
    out.reserve(checkpoints.size());
    std::size_t next = 0;
    BigFloat term(wp), ratio(wp);
    for (unsigned long k = 1; k <= checkpoints.back(); ++k) {
        // k log(1 + z/k) - z + z^2/(2k)
        ratio = zw;
        ratio.div_ui_(k);
        term = log1p(ratio);
        term.mul_ui_(k);
        term.sub_(zw);
        ratio = z2_half;
        ratio.div_ui_(k);
        term.add_(ratio);
        sum.add_(term);
        while (next < checkpoints.size() && checkpoints[next] == k) {
            out.push_back(sum.rounded_to(precision));
            ++next;
        }
    }
    return out;
}

BigFloat log_g_weierstrass(const BigFloat& z, unsigned long K, unsigned long precision) {
    if (K == 0)
        throw std::domain_error("log_g_weierstrass: K must be >= 1");
    const unsigned long ks[] = {K};
    return log_g_weierstrass_checkpoints(z, ks, precision).front();
}

BigFloat functional_equation_residual(const BigFloat& z, unsigned long precision) {
    if (cmp(z, BigFloat::from(2L, precision)) < 0)
        throw std::domain_error("functional_equation_residual: z must be >= 2");
    const BigFloat one = BigFloat::from(1L, precision);
    const BigFloat lg_z = log_barnes_g(z - one, precision).value;   // log G(z)
    const BigFloat lg_z1 = log_barnes_g(z, precision).value;        // log G(z+1)
    const BigFloat lgam = log_gamma(z, precision).value;
    return (lg_z + lgam - lg_z1).abs();
}

} // namespace barnesg
