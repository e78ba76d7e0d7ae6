#include <barnesg/commands.hpp>

#include <barnesg/asym.hpp>
#include <barnesg/barnes.hpp>
#include <barnesg/bigfloat.hpp>
#include <barnesg/coeffs.hpp>

#include <functional>
#include <memory>

namespace barnesg {

namespace {

constexpr unsigned long kErrorDigits = 17; // relative errors, per the tables

std::string sci(const BigFloat& v, unsigned long digits) { return v.to_sci_string(digits); }

std::string sci(const BigRational& v, unsigned long precision, unsigned long digits) {
    return BigFloat::from(v, precision).to_sci_string(digits);
}

void require_table_precision(unsigned long precision) {
    if (precision < 384)
        throw PrecisionError("table reproduction needs --precision >= 384 (30 significant "
                             "digits at magnitudes up to 10^211)");
}

// exact b_n(1) source for the table commands: fresh table by default,
// process-wide cache with --cache
std::function<BigRational(unsigned long)> b_of_one_source(bool use_cache,
                                                          std::shared_ptr<CoeffTable>& holder) {
    if (use_cache)
        return [](unsigned long n) { return bn_exact(n, BigRational(1)); };
    holder = std::make_shared<CoeffTable>(CoeffFamily::BOfR, CoeffParams{.r = BigRational(1)});
    return [holder](unsigned long n) { return holder->at(n); };
}

BigFloat rel_error(const BigFloat& exact, const BigFloat& approx) {
    return ((exact - approx) / exact).abs();
}

} // namespace

OutputRecord cmd_coeff(const CoeffRequest& req, unsigned long precision, unsigned long digits) {
    OutputRecord rec;
    rec.command = "coeff";
    rec.precision_bits = precision;
    rec.param("family", req.family);
    rec.param("n", std::to_string(req.n));

    BigRational value;
    if (req.family == "c") {
        value = c_coeff(req.n);
    } else if (req.family == "bn") {
        rec.param("r", req.r.to_string());
        value = bn_exact(req.n, req.r);
    } else if (req.family == "bl") {
        rec.param("r", req.r.to_string());
        rec.param("ell", std::to_string(req.ell));
        value = bn_partition(req.n, req.ell, req.r);
    } else if (req.family == "al") {
        rec.param("r", req.r.to_string());
        rec.param("ell", std::to_string(req.ell));
        value = an_partition(req.n, req.ell, req.r);
    } else if (req.family == "btk") {
        rec.param("r", req.r.to_string());
        rec.param("theta", req.theta.to_string());
        rec.param("kappa", req.kappa.to_string());
        value = bn_theta_kappa(req.n, req.theta, req.kappa, req.r, req.n);
    } else if (req.family == "gamma") {
        value = gamma_stirling(req.n);
    } else {
        throw std::invalid_argument("coeff: unknown family \"" + req.family +
                                    "\" (expected c, bn, bl, al, btk or gamma)");
    }
    rec.result("exact", value.to_string());
    rec.result("decimal", sci(value, precision, digits));
    return rec;
}

OutputRecord cmd_table1(unsigned long precision, unsigned long digits, bool use_cache) {
    require_table_precision(precision);
    OutputRecord rec;
    rec.command = "table1";
    rec.precision_bits = precision;
    rec.param("r", "1");
    rec.param("cache", use_cache ? "true" : "false");

    std::shared_ptr<CoeffTable> holder;
    auto b1 = b_of_one_source(use_cache, holder);

    const BigFloat exact25 = BigFloat::from(b1(25), precision);
    rec.result("b25.exact", sci(exact25, digits));
    for (unsigned long m : {5UL, 10UL, 15UL}) {
        const BigFloat approx = bn_tail_approx(25, BigRational(1), m, precision);
        rec.result("b25.m=" + std::to_string(m) + ".approx", sci(approx, digits));
        rec.result("b25.m=" + std::to_string(m) + ".rel_error",
                   sci(rel_error(exact25, approx), kErrorDigits));
    }
    for (unsigned long m : {5UL, 10UL, 15UL}) {
        const BigFloat approx = bn_tail_approx(100, BigRational(1), m, precision);
        rec.result("b100.m=" + std::to_string(m) + ".approx", sci(approx, digits));
    }
    return rec;
}

OutputRecord cmd_table2(unsigned long precision, unsigned long digits, bool use_cache) {
    require_table_precision(precision);
    OutputRecord rec;
    rec.command = "table2";
    rec.precision_bits = precision;
    rec.param("r", "1");
    rec.param("cache", use_cache ? "true" : "false");

    std::shared_ptr<CoeffTable> holder;
    auto b1 = b_of_one_source(use_cache, holder);

    const BigFloat exact25 = BigFloat::from(b1(25), precision);
    rec.result("b25.exact", sci(exact25, digits));
    for (unsigned long k : {0UL, 5UL, 10UL, 15UL}) {
        const BigFloat approx = bn_full_asym(25, BigRational(1), k, precision);
        rec.result("b25.k=" + std::to_string(k) + ".approx", sci(approx, digits));
        rec.result("b25.k=" + std::to_string(k) + ".rel_error",
                   sci(rel_error(exact25, approx), kErrorDigits));
    }
    for (unsigned long k : {5UL, 10UL, 15UL}) {
        const BigFloat approx = bn_full_asym(100, BigRational(1), k, precision);
        rec.result("b100.k=" + std::to_string(k) + ".approx", sci(approx, digits));
    }
    rec.footnote = "the published table prints approximation magnitudes near 10^51 that are "
                   "inconsistent with its own exact value (10^21) and error rows; the error "
                   "column is reproduced here, the published value column is not";
    return rec;
}

OutputRecord cmd_eval_g(const std::string& z, unsigned long precision, unsigned long digits,
                        bool with_oracle, unsigned long oracle_terms) {
    const BigFloat zf = BigFloat::from_string(z, precision);
    if (!zf.is_finite() || zf.sign() <= 0)
        throw std::domain_error("eval-g: z must be positive");
    OutputRecord rec;
    rec.command = "eval-g";
    rec.precision_bits = precision;
    rec.param("z", z);
    if (with_oracle)
        rec.param("oracle_terms", std::to_string(oracle_terms));

    const EvalResult res = log_barnes_g(zf, precision);
    rec.result("log_g", sci(res.value, digits));
    rec.result("terms_used", std::to_string(res.terms_used));
    rec.result("last_term_magnitude", sci(res.last_term_magnitude, 3));
    if (with_oracle) {
        const BigFloat w = log_g_weierstrass(zf, oracle_terms, precision);
        rec.result("weierstrass", sci(w, digits));
        rec.result("gap", sci((res.value - w).abs(), 3));
    }
    return rec;
}

OutputRecord cmd_convergence(unsigned long n_min, unsigned long n_max, const BigRational& r,
                             unsigned long precision, unsigned long digits) {
    if (n_min < 1 || n_min >= n_max || n_max > 200)
        throw std::domain_error("convergence: need 1 <= n_min < n_max <= 200");
    OutputRecord rec;
    rec.command = "convergence";
    rec.precision_bits = precision;
    rec.param("n_min", std::to_string(n_min));
    rec.param("n_max", std::to_string(n_max));
    rec.param("r", r.to_string());
    for (unsigned long n = n_min; n <= n_max; ++n) {
        const BigFloat ratio =
            BigFloat::from(bn_exact(n, r), precision) / leading_predictor(n, r, precision);
        rec.result("n=" + std::to_string(n) + ".ratio", sci(ratio, digits));
    }
    return rec;
}

OutputRecord cmd_bounds_check(unsigned long n_max, unsigned long precision, unsigned long digits) {
    OutputRecord rec;
    rec.command = "bounds-check";
    rec.precision_bits = precision;
    rec.param("n_max", std::to_string(n_max));
    bool all = true;
    for (unsigned long n = 0; n <= n_max; ++n) {
        const BernoulliBounds b = bernoulli_bounds_check(n, precision);
        const std::string p = "n=" + std::to_string(n);
        rec.result(p + ".lower", sci(b.lower, digits));
        rec.result(p + ".value", sci(b.value, digits));
        rec.result(p + ".upper", sci(b.upper, digits));
        rec.result(p + ".holds", b.holds ? "true" : "false");
        all = all && b.holds;
    }
    rec.result("all_hold", all ? "true" : "false");
    return rec;
}

} // namespace barnesg
