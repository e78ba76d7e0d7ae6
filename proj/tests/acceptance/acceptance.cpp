// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <barnesg/asym.hpp>
#include <barnesg/barnes.hpp>
#include <barnesg/bernoulli.hpp>
#include <barnesg/bigfloat.hpp>
#include <barnesg/coeffs.hpp>
#include <barnesg/series.hpp>
#include <barnesg/stirling.hpp>

#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace barnesg;

namespace {

int g_failed = 0;

void report(int idx, bool ok, const std::string& what, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " " << idx << ": " << what;
    if (!detail.empty())
        std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok)
        ++g_failed;
}

double rel_diff(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero())
        return a.is_zero() ? 0.0 : 1e300;
    return ((a - b) / b).abs().to_double();
}

bool within_factor(double value, double target, double factor) {
    return value > target / factor && value < target * factor;
}

// ---------------------------------------------------------------------------

void criterion1() {
    const std::string got = BigFloat::from(bn_exact(25, BigRational(1)), 384).to_sci_string(30);
    const std::string want = "-3.80007230719156835910256254456e21";
    report(1, got == want, "exact b_25(1) renders to the published 30 digits", got);
}

void criterion2() {
    const BigFloat exact = BigFloat::from(bn_exact(25, BigRational(1)), 384);
    const struct {
        unsigned long m;
        const char* value;
        double error;
    } rows[] = {
        {5, "-3.80007230718902365313203214270e21", 6.6964672375170116e-13},
        {10, "-3.80007230719156771563759457627e21", 1.6932966426732e-16},
        {15, "-3.80007230719156866209504749935e21", 7.973334727905e-17},
    };
    bool ok = true;
    std::ostringstream detail;
    for (const auto& row : rows) {
        const BigFloat approx = bn_tail_approx(25, BigRational(1), row.m, 384);
        const std::string rendered = approx.to_sci_string(30);
        const double err = rel_diff(approx, exact);
        const bool value_ok = rendered == row.value;
        const bool err_ok = within_factor(err, row.error, 2.0);
        ok = ok && value_ok && err_ok;
        detail << "m=" << row.m << (value_ok ? " value-ok" : " VALUE-MISMATCH")
               << (err_ok ? " err-ok; " : " ERR-OFF; ");
    }
    report(2, ok, "Table 1 approximations and errors at n = 25", detail.str());
}

void criterion3() {
    const BigFloat a10 = bn_tail_approx(100, BigRational(1), 10, 384);
    const BigFloat a15 = bn_tail_approx(100, BigRational(1), 15, 384);
    const BigFloat exact = BigFloat::from(bn_exact(100, BigRational(1)), 384);
    const bool digits_ok =
        a10.to_sci_string(30) == "4.61908374472303072283311502200e211" &&
        a15.to_sci_string(30) == "4.61908374472303072283311502201e211";
    const bool mutual = rel_diff(a10, a15) < 1e-27;
    const bool vs_exact = rel_diff(a10, exact) < 1e-27 && rel_diff(a15, exact) < 1e-27;
    std::ostringstream detail;
    detail << "m10=" << a10.to_sci_string(30) << " exact=" << exact.to_sci_string(30);
    report(3, digits_ok && mutual && vs_exact,
           "Table 1 values at n = 100 agree with print, each other, and the exact value",
           detail.str());
}

void criterion4() {
    const BigFloat exact = BigFloat::from(bn_exact(25, BigRational(1)), 384);
    const struct {
        unsigned long k;
        double error;
    } rows[] = {{0, 1.76e-3}, {5, 1.42e-10}, {10, 2.32e-13}, {15, 4.29e-15}};
    bool ok = true;
    std::ostringstream detail;
    for (const auto& row : rows) {
        const double err = rel_diff(bn_full_asym(25, BigRational(1), row.k, 384), exact);
        const bool row_ok = within_factor(err, row.error, 10.0);
        ok = ok && row_ok;
        detail << "k=" << row.k << " err=" << err << (row_ok ? " ok; " : " OFF; ");
    }
    report(4, ok, "Table 2 error column reproduced within one order of magnitude",
           detail.str());
}

void criterion5() {
    bool ok = true;
    for (const BigRational& r :
         {BigRational(1), BigRational(-1), BigRational(2), BigRational(1, 2)}) {
        RationalSeries a(30);
        for (unsigned long k = 1; k <= 30; ++k)
            a.set_coeff(k, r * c_coeff(k));
        const RationalSeries e = series_exp(a);
        for (unsigned long n = 0; n <= 30 && ok; ++n)
            ok = bn_exact(n, r) == e.coeff(n);
        for (unsigned long n = 1; n <= 30 && ok; ++n)
            ok = bn_partition(2 * n, 0, r) == bn_exact(n, r);
        if (!ok)
            break;
    }
    report(5, ok, "bn_exact = exp-series coefficients = reindexed partition sum, exactly");
}

void criterion6() {
    const unsigned long P = 384;
    double prev = 1e9;
    bool decreasing = true;
    double dev40 = 0, dev100 = 0;
    for (unsigned long n = 10; n <= 100; ++n) {
        const BigFloat ratio =
            BigFloat::from(bn_exact(n, BigRational(1)), P) / leading_predictor(n, BigRational(1), P);
        const double dev = std::abs(ratio.to_double() - 1.0);
        if (dev >= prev)
            decreasing = false;
        prev = dev;
        if (n == 40)
            dev40 = dev;
        if (n == 100)
            dev100 = dev;
    }
    std::ostringstream detail;
    detail << "dev(40)=" << dev40 << " dev(100)=" << dev100
           << (decreasing ? " monotone" : " NOT-MONOTONE");
    report(6, dev40 <= 1e-3 && dev100 <= 1e-4 && decreasing,
           "leading-order predictor converges at the stated rates", detail.str());
}

void criterion7() {
    const char* expected[] = {"1", "1/12", "1/288", "-139/51840", "-571/2488320"};
    bool exact_ok = true;
    for (unsigned long n = 0; n <= 4; ++n)
        exact_ok = exact_ok && gamma_stirling(n) == BigRational(expected[n]);
    bool nemes_ok = true;
    const BigFloat tol = BigFloat::pow2(-128, 256);
    for (unsigned long n = 0; n <= 4; ++n) {
        const BigFloat diff =
            (gamma_stirling_nemes(n, 256) - BigFloat::from(gamma_stirling(n), 256)).abs();
        nemes_ok = nemes_ok && cmp(diff, tol) < 0;
    }
    report(7, exact_ok && nemes_ok,
           "Stirling coefficients match exactly and the corrected closed form agrees",
           exact_ok ? (nemes_ok ? "both routes agree" : "NEMES-OFF") : "EXACT-OFF");
}

void criterion8() {
    bool ok = true;
    for (unsigned long n = 0; n <= 100 && ok; ++n)
        ok = bernoulli_bounds_check(n).holds;
    report(8, ok, "corrected Bernoulli bounds hold for 0 <= n <= 100");
}

void criterion9() {
    const unsigned long P = 256;
    const double cap = std::pow(2.0, -200);
    bool residual_ok = true;
    for (double z : {5.0, 10.5, 20.5})
        residual_ok =
            residual_ok && functional_equation_residual(BigFloat::from(z, P), P).to_double() <= cap;
    const bool known_ok =
        log_barnes_g(BigFloat::from(1L, P), P).value.abs().to_double() <= cap &&
        log_barnes_g(BigFloat::from(2L, P), P).value.abs().to_double() <= cap;

    const BigFloat ref = log_barnes_g(BigFloat::from(8L, P), P).value;
    std::vector<unsigned long> ks;
    for (int e = 12; e <= 17; ++e)
        ks.push_back(1UL << e);
    const auto ws = log_g_weierstrass_checkpoints(BigFloat::from(8L, P), ks, P);
    bool halving = true;
    std::ostringstream detail;
    for (std::size_t i = 1; i < ws.size(); ++i) {
        const double g_prev = (ref - ws[i - 1]).abs().to_double();
        const double g_cur = (ref - ws[i]).abs().to_double();
        const double ratio = g_cur / g_prev;
        halving = halving && ratio > 0.4 && ratio < 0.6;
        detail << "r=" << ratio << " ";
    }
    report(9, residual_ok && known_ok && halving,
           "Barnes G self-consistency: functional equation, known values, Weierstrass halving",
           detail.str());
}

void criterion10() {
    bool ortho = true;
    for (unsigned long n = 0; n <= 20 && ortho; ++n)
        for (unsigned long k = 0; k <= n && ortho; ++k) {
            BigInt sum(0);
            for (unsigned long nu = k; nu <= n; ++nu)
                sum += stirling2(n, nu) * stirling1_signed(nu, k);
            ortho = sum == (n == k ? 1 : 0);
        }
    bool genfun = true;
    const unsigned long N = 12;
    for (unsigned long k = 1; k <= 4 && genfun; ++k) {
        RationalSeries prod(N);
        prod.set_coeff(0, BigRational(1));
        for (unsigned long i = 1; i <= k; ++i) {
            RationalSeries geo(N);
            BigRational p(1);
            for (unsigned long m = 0; m <= N; ++m) {
                geo.set_coeff(m, p);
                p *= BigRational(BigInt(i));
            }
            prod = series_mul(prod, geo);
        }
        for (unsigned long nu = 0; nu <= N && genfun; ++nu) {
            const BigRational got = nu >= k ? prod.coeff(nu - k) : BigRational(0);
            genfun = got == BigRational(stirling2(nu, k));
        }
    }
    report(10, ortho && genfun, "Stirling orthogonality and generating-function identities");
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (g_failed == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << g_failed << " criterion/criteria failed\n";
    return 1;
}
