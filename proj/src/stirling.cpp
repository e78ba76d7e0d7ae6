#include <barnesg/stirling.hpp>

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace barnesg {

namespace {

struct Triangle {
    std::vector<std::vector<BigInt>> rows;
    std::shared_mutex mutex;
};

Triangle g_second;
Triangle g_first;

template <typename Step>
const BigInt& triangle_at(Triangle& tri, unsigned long n, unsigned long k, Step step) {
    {
        std::shared_lock lock(tri.mutex);
        if (n < tri.rows.size())
            return tri.rows[n][k];
    }
    std::unique_lock lock(tri.mutex);
    if (tri.rows.empty())
        tri.rows.push_back({BigInt(1)});
    while (tri.rows.size() <= n) {
        const unsigned long m = tri.rows.size();
        const auto& prev = tri.rows[m - 1];
        std::vector<BigInt> row(m + 1);
        row[0] = 0;
        row[m] = 1;
        for (unsigned long j = 1; j < m; ++j)
            row[j] = step(m, j, prev[j], prev[j - 1]);
        tri.rows.push_back(std::move(row));
    }
    return tri.rows[n][k];
}

} // namespace

BigInt stirling2(unsigned long nu, unsigned long k) {
    if (k > nu)
        return 0;
    return triangle_at(g_second, nu, k,
                       [](unsigned long, unsigned long j, const BigInt& same,
                          const BigInt& left) -> BigInt { return BigInt(j) * same + left; });
}

BigInt stirling1_signed(unsigned long n, unsigned long nu) {
    if (nu > n)
        return 0;
    return triangle_at(g_first, n, nu,
                       [](unsigned long m, unsigned long, const BigInt& same,
                          const BigInt& left) -> BigInt { return left - BigInt(m - 1) * same; });
}

BigInt stirling2_explicit(unsigned long nu, unsigned long k) {
    if (k > nu)
        return 0;
    BigInt sum(0);
    for (unsigned long j = 0; j <= k; ++j) {
        BigInt term = binomial(k, j) * pow_int(BigInt(static_cast<long>(k - j)), nu);
        if (j % 2)
            sum -= term;
        else
            sum += term;
    }
    BigInt q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), sum.get_mpz_t(), factorial(k).get_mpz_t());
    if (rem != 0)
        throw std::logic_error("stirling2_explicit: sum not divisible by k!");
    return q;
}

BigRational stirling2_explicit_printed_variant(unsigned long nu, unsigned long k) {
    BigInt sum(0);
    for (unsigned long j = 0; j <= k; ++j)
        sum += binomial(k, j) * pow_int(BigInt(static_cast<long>(k - j)), nu);
    if (k % 2)
        sum = -sum;
    return BigRational(sum, factorial(k));
}

} // namespace barnesg
