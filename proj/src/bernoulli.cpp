#include <barnesg/bernoulli.hpp>

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace barnesg {

namespace {

// deque keeps references stable while the cache grows
std::deque<BigRational> g_cache{BigRational(1)};
std::shared_mutex g_mutex;

void extend_unlocked(unsigned long n) {
    while (g_cache.size() <= n) {
        const unsigned long m = g_cache.size();
        // B_m = -1/(m+1) * sum_{k=0}^{m-1} C(m+1,k) B_k
        BigRational sum(0);
        BigInt binom(1); // C(m+1, 0)
        for (unsigned long k = 0; k < m; ++k) {
            sum += BigRational(binom) * g_cache[k];
            binom = binom * BigInt(m + 1 - k) / BigInt(k + 1);
        }
        g_cache.emplace_back(-sum / BigRational(static_cast<long>(m) + 1));
    }
}

} // namespace

const BigRational& bernoulli(unsigned long n) {
    {
        std::shared_lock lock(g_mutex);
        if (n < g_cache.size())
            return g_cache[n];
    }
    std::unique_lock lock(g_mutex);
    extend_unlocked(n);
    return g_cache[n];
}

ZetaEven zeta_even_exact(unsigned long k) {
    if (k == 0)
        throw std::domain_error("zeta_even_exact: k must be >= 1");
    // zeta(2k) = (-1)^(k+1) B_2k (2 pi)^2k / (2 (2k)!)
    BigRational q = bernoulli(2 * k) * BigRational(pow_int(BigInt(2), 2 * k), 2 * factorial(2 * k));
    if (k % 2 == 0)
        q = -q;
    return ZetaEven{q, 2 * k};
}

} // namespace barnesg
