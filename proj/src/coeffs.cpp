#include <barnesg/coeffs.hpp>

#include <barnesg/bernoulli.hpp>
#include <barnesg/series.hpp>
#include <barnesg/stirling.hpp>

#include <cassert>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace barnesg {

namespace {

// B_{m+2} / (m (m+1) (m+2)); zero for odd m.
BigRational bernoulli_tail_factor(unsigned long m) {
    return bernoulli(m + 2) / BigRational(BigInt(m) * BigInt(m + 1) * BigInt(m + 2));
}

/*
 * sum over all (k_1..k_n) with sum_i (i+ell) k_i = n of
 * prod_i factor(i)^{k_i} / k_i!, with subtrees pruned as soon as a zero
 * factor would enter with positive multiplicity.
 */
BigRational weighted_partition_sum(unsigned long n, unsigned long ell,
                                   const std::vector<BigRational>& factor_by_part) {
    BigRational total(0);
    // iterative over parts 1..n; recursion expressed with an explicit lambda
    auto rec = [&](auto&& self, unsigned long part, unsigned long remaining,
                   const BigRational& partial) -> void {
        if (remaining == 0) {
            total += partial;
            return;
        }
        if (part > n || part + ell > remaining)
            return;
        const unsigned long per = part + ell;
        const BigRational& f = factor_by_part[part];
        self(self, part + 1, remaining, partial); // k_part = 0
        if (f.is_zero())
            return;
        BigRational p = partial;
        for (unsigned long k = 1; k * per <= remaining; ++k) {
            p = p * f / BigRational(static_cast<long>(k));
            self(self, part + 1, remaining - k * per, p);
        }
    };
    rec(rec, 1, n, BigRational(1));
    return total;
}

RationalSeries gamma_stirling_series(unsigned long order) {
    RationalSeries a(order);
    for (unsigned long k = 1; 2 * k - 1 <= order; ++k)
        a.set_coeff(2 * k - 1, bernoulli(2 * k) / BigRational(BigInt(2 * k) * BigInt(2 * k - 1)));
    return series_exp(a);
}

RationalSeries b_of_one_power_series(unsigned long order, const BigRational& exponent) {
    RationalSeries base(order);
    base.set_coeff(0, BigRational(1));
    for (unsigned long k = 1; k <= order; ++k)
        base.set_coeff(k, bn_exact(k, BigRational(1)));
    return series_pow(base, exponent);
}

} // namespace

struct CoeffTable::State {
    std::vector<BigRational> values;
    mutable std::shared_mutex mutex;
};

CoeffTable::CoeffTable(CoeffFamily family, CoeffParams params)
    : family_(family), params_(std::move(params)), state_(std::make_unique<State>()) {
    switch (family_) {
    case CoeffFamily::C:
        state_->values = {BigRational(0)}; // c_n defined for n >= 1 only
        break;
    case CoeffFamily::BOfR:
    case CoeffFamily::BEllR:
    case CoeffFamily::AEllR:
    case CoeffFamily::BThetaKappaR:
    case CoeffFamily::GammaStirling:
        state_->values = {BigRational(1)};
        break;
    }
}

CoeffTable::~CoeffTable() = default;
CoeffTable::CoeffTable(CoeffTable&&) noexcept = default;
CoeffTable& CoeffTable::operator=(CoeffTable&&) noexcept = default;

unsigned long CoeffTable::max_index() const {
    std::shared_lock lock(state_->mutex);
    return state_->values.size() - 1;
}

BigRational CoeffTable::at(unsigned long n) {
    {
        std::shared_lock lock(state_->mutex);
        if (n < state_->values.size())
            return state_->values[n];
    }
    extend_to(n);
    std::shared_lock lock(state_->mutex);
    return state_->values[n];
}

void CoeffTable::extend_to(unsigned long n) const {
    std::unique_lock lock(state_->mutex);
    auto& vals = state_->values;
    if (n < vals.size())
        return;

    switch (family_) {
    case CoeffFamily::C:
        for (unsigned long m = vals.size(); m <= n; ++m)
            vals.push_back(bernoulli(2 * m + 2) /
                           BigRational(BigInt(2 * m) * BigInt(2 * m + 1) * BigInt(2 * m + 2)));
        break;

    case CoeffFamily::BOfR:
        for (unsigned long m = vals.size(); m <= n; ++m) {
            BigRational s(0);
            for (unsigned long j = 0; j < m; ++j) {
                const unsigned long i = 2 * m - 2 * j;
                s += bernoulli(i + 2) / BigRational(BigInt(i + 1) * BigInt(i + 2)) * vals[j];
            }
            vals.push_back(params_.r * s / BigRational(BigInt(2 * m)));
        }
        break;

    case CoeffFamily::BEllR: {
        for (unsigned long m = vals.size(); m <= n; ++m) {
            std::vector<BigRational> factors(m + 1);
            for (unsigned long i = 1; i <= m; ++i)
                factors[i] = params_.r * bernoulli_tail_factor(i);
            vals.push_back(weighted_partition_sum(m, params_.ell, factors));
        }
        break;
    }

    case CoeffFamily::AEllR: {
        for (unsigned long m = vals.size(); m <= n; ++m) {
            std::vector<BigRational> factors(m + 1);
            for (unsigned long i = 1; i <= m; ++i)
                factors[i] = bn_partition(i, params_.ell, params_.r);
            vals.push_back(weighted_partition_sum(m, 0, factors));
        }
        break;
    }

    case CoeffFamily::BThetaKappaR: {
        const BigRational exponent = params_.theta * params_.r + params_.kappa;
        const RationalSeries p = b_of_one_power_series(n, exponent);
        for (unsigned long m = 0; m < vals.size(); ++m)
            assert(vals[m] == p.coeff(m));
        for (unsigned long m = vals.size(); m <= n; ++m)
            vals.push_back(p.coeff(m));
        break;
    }

    case CoeffFamily::GammaStirling: {
        const RationalSeries g = gamma_stirling_series(n);
        for (unsigned long m = 0; m < vals.size(); ++m)
            assert(vals[m] == g.coeff(m));
        for (unsigned long m = vals.size(); m <= n; ++m)
            vals.push_back(g.coeff(m));
        break;
    }
    }
}

namespace {

struct RegistryKey {
    int family;
    BigRational r;
    unsigned long ell;
    BigRational theta;
    BigRational kappa;

    bool operator<(const RegistryKey& o) const {
        if (family != o.family) return family < o.family;
        if (r != o.r) return r < o.r;
        if (ell != o.ell) return ell < o.ell;
        if (theta != o.theta) return theta < o.theta;
        return kappa < o.kappa;
    }
};

CoeffTable& registry_table(CoeffFamily family, const CoeffParams& params) {
    static std::map<RegistryKey, std::unique_ptr<CoeffTable>> tables;
    static std::mutex mutex;
    RegistryKey key{static_cast<int>(family), params.r, params.ell, params.theta, params.kappa};
    std::lock_guard lock(mutex);
    auto it = tables.find(key);
    if (it == tables.end())
        it = tables.emplace(std::move(key), std::make_unique<CoeffTable>(family, params)).first;
    return *it->second;
}

void require_nonzero_r(const BigRational& r, const char* who) {
    if (r.is_zero())
        throw std::domain_error(std::string(who) + ": r must be nonzero");
}

} // namespace

BigRational c_coeff(unsigned long n) {
    if (n == 0)
        throw std::domain_error("c_coeff: n must be >= 1");
    return registry_table(CoeffFamily::C, CoeffParams{}).at(n);
}

BigRational bn_exact(unsigned long n, const BigRational& r) {
    require_nonzero_r(r, "bn_exact");
    return registry_table(CoeffFamily::BOfR, CoeffParams{.r = r}).at(n);
}

BigRational bn_partition(unsigned long n, unsigned long ell, const BigRational& r) {
    require_nonzero_r(r, "bn_partition");
    if (n == 0)
        throw std::domain_error("bn_partition: n must be >= 1");
    return registry_table(CoeffFamily::BEllR, CoeffParams{.r = r, .ell = ell}).at(n);
}

BigRational an_partition(unsigned long n, unsigned long ell, const BigRational& r) {
    require_nonzero_r(r, "an_partition");
    if (n == 0)
        throw std::domain_error("an_partition: n must be >= 1");
    return registry_table(CoeffFamily::AEllR, CoeffParams{.r = r, .ell = ell}).at(n);
}

BigRational bn_theta_kappa(unsigned long n, const BigRational& theta, const BigRational& kappa,
                           const BigRational& r, unsigned long order) {
    if (theta.is_zero())
        throw std::domain_error("bn_theta_kappa: theta must be nonzero");
    require_nonzero_r(r, "bn_theta_kappa");
    if (n > order)
        throw std::domain_error("bn_theta_kappa: n must not exceed the truncation order");
    return registry_table(CoeffFamily::BThetaKappaR,
                          CoeffParams{.r = r, .theta = theta, .kappa = kappa})
        .at(n);
}

BigRational gamma_stirling(unsigned long n) {
    return registry_table(CoeffFamily::GammaStirling, CoeffParams{}).at(n);
}

BigFloat gamma_stirling_nemes(unsigned long n, unsigned long precision) {
    const BigFloat pi = BigFloat::pi(precision);
    const BigFloat prefactor =
        gamma(BigFloat::from(BigRational(6 * static_cast<long>(n) + 3, 2), precision)) / sqrt(pi);
    BigFloat sum(precision);
    for (unsigned long k = 0; k <= 2 * n; ++k) {
        BigFloat inner(precision);
        const unsigned long M = 2 * n + 2 * k;
        for (unsigned long j = 0; j <= k; ++j) {
            BigInt num = stirling2(M - j, k - j);
            if ((k - j) % 2)
                num = -num;
            inner.add_(BigFloat::from(num, precision) /
                       BigFloat::from(factorial(j) * factorial(M - j), precision));
        }
        BigFloat term = BigFloat::pow2(static_cast<long>(n + k + 1), precision);
        term.div_(BigFloat::from(BigInt(2 * n + 2 * k + 1) * factorial(2 * n - k), precision));
        term.mul_(inner);
        sum.add_(term);
    }
    return prefactor * sum;
}

} // namespace barnesg
