#ifndef BARNESG_BARNES_HPP
#define BARNESG_BARNES_HPP

#include <barnesg/bigfloat.hpp>

#include <span>
#include <vector>

namespace barnesg {

struct EvalResult {
    BigFloat value;
    unsigned long terms_used = 0;      // Bernoulli tail terms included
    BigFloat last_term_magnitude;      // magnitude of the final included term
    unsigned long precision_bits = 0;
};

/*
 * log Gamma(z) for z > 0 via the Stirling series with argument shift: the
 * argument is raised until it reaches max(10, precision/6), the Bernoulli
 * tail is summed until its terms stop decreasing (or fall below the target
 * precision), and the shift is removed with log Gamma(z) = log Gamma(z+s) -
 * sum log(z+i).
 */
EvalResult log_gamma(const BigFloat& z, unsigned long precision);

/*
 * log G(z+1) for z > 0. Uses log G(z+1) = log G(z+s+1) - sum_{i=1}^{s}
 * log Gamma(z+i) to raise the argument past max(10, precision/6), then the
 * Bernoulli-tail expansion of log G at the shifted argument.
 */
EvalResult log_barnes_g(const BigFloat& z, unsigned long precision);

/*
 * Evaluation core behind log_barnes_g with an explicit minimum argument for
 * the shift; min_argument = 0 selects the default policy. Exposed so the
 * optimal-truncation behaviour can be measured without the shift.
 */
EvalResult log_barnes_g_core(const BigFloat& z, unsigned long precision, double min_argument);

/// log A = (gamma + log 2 pi)/12 - zeta'(2)/(2 pi^2), requires precision >= 64.
BigFloat log_glaisher(unsigned long precision);

/// Euler-Mascheroni constant via Euler-Maclaurin on H_N - log N, precision >= 64.
BigFloat euler_gamma(unsigned long precision);

/*
 * log G(z+1) from the Weierstrass canonical product truncated at K factors:
 *   (z/2) log 2pi - z(z+1)/2 - gamma z^2/2
 *   + sum_{k=1}^{K} (k log(1+z/k) - z + z^2/(2k)).
 * No tail correction; converges like O(1/K). Slow validation oracle.
 */
BigFloat log_g_weierstrass(const BigFloat& z, unsigned long K, unsigned long precision);

/// Same sum reported at several cut-offs in one pass (checkpoints ascending).
std::vector<BigFloat> log_g_weierstrass_checkpoints(const BigFloat& z,
                                                    std::span<const unsigned long> checkpoints,
                                                    unsigned long precision);

/// |log G(z) + log Gamma(z) - log G(z+1)|, z >= 2.
BigFloat functional_equation_residual(const BigFloat& z, unsigned long precision);

} // namespace barnesg

#endif
