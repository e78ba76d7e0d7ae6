#include <barnesg/commands.hpp>
#include <barnesg/output.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct CommonFlags {
    unsigned long precision = 384;
    unsigned long digits = 30;
    std::string format = "text";
    std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--precision", flags.precision, "working precision in bits")
        ->default_val(384);
    cmd->add_option("--digits", flags.digits, "significant digits in decimal output")
        ->default_val(30);
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");
    cmd->add_option("--output", flags.output, "write output to a file instead of stdout");
}

int emit(const barnesg::OutputRecord& rec, const CommonFlags& flags) {
    const std::string rendered = barnesg::render(rec, barnesg::parse_output_format(flags.format));
    if (flags.output.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(flags.output, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + flags.output);
        out << rendered;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coefficients and evaluation of the Barnes G-function asymptotic expansion"};
    app.require_subcommand(1);

    CommonFlags flags;

    barnesg::CoeffRequest coeff_req;
    std::string coeff_r = "1", coeff_theta = "1", coeff_kappa = "0";
    auto* coeff = app.add_subcommand("coeff", "exact coefficient families");
    coeff->add_option("--family", coeff_req.family, "c | bn | bl | al | btk | gamma")
        ->required();
    coeff->add_option("-n,--index", coeff_req.n, "coefficient index")->required();
    coeff->add_option("-r", coeff_r, "parameter r as integer or p/q");
    coeff->add_option("--ell", coeff_req.ell, "parameter ell");
    coeff->add_option("--theta", coeff_theta, "parameter theta as integer or p/q");
    coeff->add_option("--kappa", coeff_kappa, "parameter kappa as integer or p/q");
    add_common(coeff, flags);

    bool use_cache = false;
    auto* table1 = app.add_subcommand("table1", "truncated-tail approximations of b_25(1), b_100(1)");
    table1->add_flag("--cache", use_cache, "reuse process-wide coefficient tables");
    add_common(table1, flags);

    auto* table2 = app.add_subcommand("table2", "full asymptotic approximations of b_25(1), b_100(1)");
    table2->add_flag("--cache", use_cache, "reuse process-wide coefficient tables");
    add_common(table2, flags);

    std::string z;
    bool oracle = false;
    unsigned long oracle_terms = 1UL << 20;
    auto* evalg = app.add_subcommand("eval-g", "evaluate log G(z+1)");
    evalg->add_option("-z", z, "argument z > 0 (log G(z+1) is computed)")->required();
    evalg->add_flag("--oracle", oracle, "also evaluate the Weierstrass-product oracle");
    evalg->add_option("--oracle-terms", oracle_terms, "product factors for the oracle")
        ->default_val(1UL << 20);
    add_common(evalg, flags);

    unsigned long n_min = 1, n_max = 40;
    std::string conv_r = "1";
    auto* conv = app.add_subcommand("convergence", "b_n(r) over the leading-order predictor");
    conv->add_option("--n-min", n_min, "first index")->required();
    conv->add_option("--n-max", n_max, "last index")->required();
    conv->add_option("-r", conv_r, "parameter r as integer or p/q");
    add_common(conv, flags);

    unsigned long bounds_n_max = 100;
    auto* bounds = app.add_subcommand("bounds-check", "Bernoulli magnitude bounds");
    bounds->add_option("--n-max", bounds_n_max, "check 0..n_max")->default_val(100);
    add_common(bounds, flags);

    try {
        app.parse(argc, argv);

        barnesg::OutputRecord rec;
        if (coeff->parsed()) {
            coeff_req.r = barnesg::BigRational(coeff_r);
            coeff_req.theta = barnesg::BigRational(coeff_theta);
            coeff_req.kappa = barnesg::BigRational(coeff_kappa);
            rec = barnesg::cmd_coeff(coeff_req, flags.precision, flags.digits);
        } else if (table1->parsed()) {
            rec = barnesg::cmd_table1(flags.precision, flags.digits, use_cache);
        } else if (table2->parsed()) {
            rec = barnesg::cmd_table2(flags.precision, flags.digits, use_cache);
        } else if (evalg->parsed()) {
            rec = barnesg::cmd_eval_g(z, flags.precision, flags.digits, oracle, oracle_terms);
        } else if (conv->parsed()) {
            rec = barnesg::cmd_convergence(n_min, n_max, barnesg::BigRational(conv_r),
                                           flags.precision, flags.digits);
        } else {
            rec = barnesg::cmd_bounds_check(bounds_n_max, flags.precision, flags.digits);
        }
        return emit(rec, flags);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const barnesg::PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
