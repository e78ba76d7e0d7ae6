#ifndef BARNESG_COEFFS_HPP
#define BARNESG_COEFFS_HPP

#include <barnesg/bigfloat.hpp>
#include <barnesg/rational.hpp>

#include <memory>
#include <vector>

namespace barnesg {

enum class CoeffFamily {
    C,              // c_n = B_{2n+2} / (2n (2n+1) (2n+2))
    BOfR,           // b_n(r), even-power recurrence
    BEllR,          // b_n(ell, r), partition sum
    AEllR,          // a_n(ell, r), exp of the b_n(ell, r) series
    BThetaKappaR,   // coefficients of (1 + sum b_k(1) x^k)^(theta r + kappa)
    GammaStirling,  // gamma_n, Stirling series coefficients
};

struct CoeffParams {
    BigRational r{1};
    unsigned long ell = 0;
    BigRational theta{1};
    BigRational kappa{0};

    friend bool operator==(const CoeffParams&, const CoeffParams&) = default;
};

/*
 * Append-only cache of one coefficient family. Extending a table never
 * changes existing entries; concurrent reads are allowed while extensions
 * are serialized per table.
 */
class CoeffTable {
public:
    CoeffTable(CoeffFamily family, CoeffParams params);
    ~CoeffTable();
    CoeffTable(CoeffTable&&) noexcept;
    CoeffTable& operator=(CoeffTable&&) noexcept;

    CoeffFamily family() const { return family_; }
    const CoeffParams& params() const { return params_; }

    /// Highest index currently stored.
    unsigned long max_index() const;

    /// Value at index n, extending the table when needed.
    BigRational at(unsigned long n);

private:
    struct State;
    void extend_to(unsigned long n) const; // serialized by the state lock

    CoeffFamily family_;
    CoeffParams params_;
    std::unique_ptr<State> state_;
};

/// c_n = B_{2n+2}/(2n(2n+1)(2n+2)), n >= 1.
BigRational c_coeff(unsigned long n);

/// b_n(r) by the defining recurrence; r must be nonzero. Memoized per r.
BigRational bn_exact(unsigned long n, const BigRational& r);

/// b_n(ell, r): partition sum over (1+ell)k_1 + ... + (n+ell)k_n = n.
BigRational bn_partition(unsigned long n, unsigned long ell, const BigRational& r);

/// a_n(ell, r): partition sum over k_1 + 2k_2 + ... + nk_n = n of prod b_i^{k_i}/k_i!.
BigRational an_partition(unsigned long n, unsigned long ell, const BigRational& r);

/*
 * Coefficient of x^n in (1 + sum_{k>=1} b_k(1) x^k)^(theta r + kappa),
 * computed through series_pow at truncation `order` (n <= order required).
 */
BigRational bn_theta_kappa(unsigned long n, const BigRational& theta, const BigRational& kappa,
                           const BigRational& r, unsigned long order);

/// gamma_n = [x^n] exp(sum_{k>=1} B_{2k} x^{2k-1} / (2k (2k-1))).
BigRational gamma_stirling(unsigned long n);

/*
 * Nemes' closed form for gamma_n, evaluated in floating point at `precision`
 * bits as a cross-check of gamma_stirling:
 *
 *   gamma_n = Gamma(3n+3/2)/sqrt(pi) * sum_{k=0}^{2n} 2^(n+k+1) /
 *             ((2n+2k+1) (2n-k)!) * sum_{j=0}^{k} (-1)^(k-j)
 *             S(2n+2k-j, k-j) / (j! (2n+2k-j)!)
 *
 * The (2n-k)! factor is the working reading of a garbled denominator in the
 * usual citation of this formula; with it, the sum reproduces gamma_n
 * exactly (validated in the tests against the series definition).
 */
BigFloat gamma_stirling_nemes(unsigned long n, unsigned long precision);

} // namespace barnesg

#endif
