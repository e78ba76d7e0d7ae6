#include <barnesg/bernoulli.hpp>
#include <barnesg/partitions.hpp>
#include <barnesg/series.hpp>
#include <barnesg/stirling.hpp>

#include <doctest.h>

using namespace barnesg;

namespace {

struct Lcg {
    unsigned long long s;
    explicit Lcg(unsigned long long seed) : s(seed) {}
    unsigned long next(unsigned long bound) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<unsigned long>((s >> 33) % bound);
    }
    BigRational rational() {
        long num = static_cast<long>(next(41)) - 20;
        long den = static_cast<long>(next(9)) + 1;
        return BigRational(num, den);
    }
};

RationalSeries random_series(Lcg& gen, unsigned long order, const BigRational& head) {
    RationalSeries s(order);
    s.set_coeff(0, head);
    for (unsigned long n = 1; n <= order; ++n)
        s.set_coeff(n, gen.rational());
    return s;
}

// brute-force convolution, independent of series_mul
std::vector<BigRational> naive_convolution(const RationalSeries& a, const RationalSeries& b) {
    const unsigned long N = a.truncation_order();
    std::vector<BigRational> c(N + 1, BigRational(0));
    for (unsigned long i = 0; i <= N; ++i)
        for (unsigned long j = 0; i + j <= N; ++j)
            c[i + j] += a.coeff(i) * b.coeff(j);
    return c;
}

} // namespace

TEST_CASE("series_mul basics") {
    RationalSeries one_plus(std::vector<BigRational>{1, 1, 0});
    RationalSeries one_minus(std::vector<BigRational>{1, -1, 0});
    RationalSeries p = series_mul(one_plus, one_minus);
    CHECK(p.coeff(0) == BigRational(1));
    CHECK(p.coeff(1) == BigRational(0));
    CHECK(p.coeff(2) == BigRational(-1));

    // geometric series times (1 - x) telescopes to 1
    RationalSeries geo(5), shift(5);
    for (unsigned long n = 0; n <= 5; ++n)
        geo.set_coeff(n, BigRational(1));
    shift.set_coeff(0, BigRational(1));
    shift.set_coeff(1, BigRational(-1));
    RationalSeries q = series_mul(geo, shift);
    for (unsigned long n = 0; n <= 5; ++n)
        CHECK(q.coeff(n) == (n == 0 ? BigRational(1) : BigRational(0)));
}

TEST_CASE("series_mul equals schoolbook convolution on random input") {
    Lcg gen(7);
    for (int rep = 0; rep < 10; ++rep) {
        RationalSeries a = random_series(gen, 9, gen.rational());
        RationalSeries b = random_series(gen, 9, gen.rational());
        RationalSeries c = series_mul(a, b);
        auto expect = naive_convolution(a, b);
        for (unsigned long n = 0; n <= 9; ++n)
            CHECK(c.coeff(n) == expect[n]);
    }
}

TEST_CASE("series_mul rejects mismatched orders") {
    CHECK_THROWS_AS(series_mul(RationalSeries(3), RationalSeries(4)), std::invalid_argument);
}

TEST_CASE("series_exp basics") {
    RationalSeries zero(4);
    RationalSeries e0 = series_exp(zero);
    CHECK(e0.coeff(0) == BigRational(1));
    for (unsigned long n = 1; n <= 4; ++n)
        CHECK(e0.coeff(n) == BigRational(0));

    RationalSeries x(3);
    x.set_coeff(1, BigRational(1));
    RationalSeries ex = series_exp(x);
    CHECK(ex.coeff(0) == BigRational(1));
    CHECK(ex.coeff(1) == BigRational(1));
    CHECK(ex.coeff(2) == BigRational(1, 2));
    CHECK(ex.coeff(3) == BigRational(1, 6));

    RationalSeries bad(2);
    bad.set_coeff(0, BigRational(1));
    CHECK_THROWS_AS(series_exp(bad), std::invalid_argument);
}

TEST_CASE("series_log basics and round trip") {
    RationalSeries one(3);
    one.set_coeff(0, BigRational(1));
    RationalSeries l0 = series_log(one);
    for (unsigned long n = 0; n <= 3; ++n)
        CHECK(l0.coeff(n) == BigRational(0));

    RationalSeries onex(3);
    onex.set_coeff(0, BigRational(1));
    onex.set_coeff(1, BigRational(1));
    RationalSeries lx = series_log(onex);
    CHECK(lx.coeff(1) == BigRational(1));
    CHECK(lx.coeff(2) == BigRational(-1, 2));
    CHECK(lx.coeff(3) == BigRational(1, 3));

    CHECK_THROWS_AS(series_log(RationalSeries(2)), std::invalid_argument);

    Lcg gen(13);
    for (int rep = 0; rep < 8; ++rep) {
        RationalSeries a = random_series(gen, 12, BigRational(1));
        CHECK(series_exp(series_log(a)) == a);
    }
}

TEST_CASE("series_pow basics") {
    RationalSeries onex(2);
    onex.set_coeff(0, BigRational(1));
    onex.set_coeff(1, BigRational(1));
    RationalSeries p1 = series_pow(onex, BigRational(1));
    CHECK(p1 == onex);

    RationalSeries ph = series_pow(onex, BigRational(1, 2));
    CHECK(ph.coeff(0) == BigRational(1));
    CHECK(ph.coeff(1) == BigRational(1, 2));
    CHECK(ph.coeff(2) == BigRational(-1, 8));
}

TEST_CASE("series_pow exponent additivity") {
    Lcg gen(29);
    const BigRational e1(3, 2), e2(-2, 5);
    for (int rep = 0; rep < 5; ++rep) {
        RationalSeries a = random_series(gen, 10, BigRational(1));
        RationalSeries lhs = series_pow(a, e1 + e2);
        RationalSeries rhs = series_mul(series_pow(a, e1), series_pow(a, e2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("partition enumeration examples and order") {
    auto p3 = enumerate_partitions(3, 0);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].multiplicities == std::vector<unsigned long>{3, 0, 0});
    CHECK(p3[1].multiplicities == std::vector<unsigned long>{1, 1, 0});
    CHECK(p3[2].multiplicities == std::vector<unsigned long>{0, 0, 1});
    CHECK(p3[0].weight == BigRational(1, 6)); // 1/3!
    CHECK(p3[1].weight == BigRational(1));
    CHECK(p3[2].weight == BigRational(1));

    auto p1 = enumerate_partitions(1, 0);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].multiplicities == std::vector<unsigned long>{1});

    // (1+1)k_1 + (2+1)k_2 = 2 forces k_1 = 1
    auto p21 = enumerate_partitions(2, 1);
    REQUIRE(p21.size() == 1);
    CHECK(p21[0].multiplicities == std::vector<unsigned long>{1, 0});

    CHECK_THROWS_AS(enumerate_partitions(0, 0), std::invalid_argument);
}

TEST_CASE("partition constraint and uniqueness") {
    for (unsigned long n = 1; n <= 9; ++n) {
        for (unsigned long ell : {0UL, 1UL, 2UL}) {
            auto parts = enumerate_partitions(n, ell);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                unsigned long total = 0;
                for (unsigned long j = 0; j < n; ++j)
                    total += (j + 1 + ell) * parts[i].multiplicities[j];
                CHECK(total == n);
                if (i > 0)
                    CHECK(parts[i - 1].multiplicities > parts[i].multiplicities);
            }
        }
    }
}

TEST_CASE("partition weights reproduce Bell numbers") {
    // sum over partitions of n! / prod(i!^{k_i} k_i!) = B_n = sum_k S(n,k)
    for (unsigned long n = 1; n <= 8; ++n) {
        BigRational total(0);
        enumerate_partitions(n, 0, [&](const PartitionTerm& t) {
            BigRational w = t.weight; // already 1/prod k_i!
            for (unsigned long i = 0; i < n; ++i)
                if (t.multiplicities[i] > 0)
                    w /= BigRational(pow_int(factorial(i + 1), t.multiplicities[i]));
            total += BigRational(factorial(n)) * w;
        });
        BigInt bell(0);
        for (unsigned long k = 0; k <= n; ++k)
            bell += stirling2(n, k);
        CHECK(total == BigRational(bell));
    }
}

TEST_CASE("double generating function of both Stirling kinds") {
    // [z^n] ((1+z)^x - 1)^k = sum_nu k! S(nu,k) s(n,nu) x^nu / n!  for integer x
    const unsigned long N = 8;
    for (long xv : {1L, 2L, 3L}) {
        RationalSeries base(N);
        base.set_coeff(0, BigRational(1));
        base.set_coeff(1, BigRational(1));
        RationalSeries pow_x = series_pow(base, BigRational(xv)); // (1+z)^x
        pow_x.set_coeff(0, BigRational(0));                       // minus 1
        for (unsigned long k = 1; k <= 3; ++k) {
            RationalSeries lhs = pow_x;
            for (unsigned long rep = 1; rep < k; ++rep)
                lhs = series_mul(lhs, pow_x);
            for (unsigned long n = k; n <= N; ++n) {
                BigRational rhs(0);
                for (unsigned long nu = k; nu <= n; ++nu)
                    rhs += BigRational(factorial(k) * stirling2(nu, k) *
                                       stirling1_signed(n, nu) * pow_int(BigInt(xv), nu));
                rhs /= BigRational(factorial(n));
                CHECK(lhs.coeff(n) == rhs);
            }
        }
    }
}

TEST_CASE("generating function of the second kind (single variable)") {
    // x^k / ((1-x)(1-2x)...(1-kx)) has x^nu coefficient S(nu,k)
    const unsigned long N = 12;
    for (unsigned long k = 1; k <= 4; ++k) {
        RationalSeries prod(N);
        prod.set_coeff(0, BigRational(1));
        for (unsigned long i = 1; i <= k; ++i) {
            RationalSeries geo(N); // 1/(1-ix) = sum (i x)^m
            BigRational p(1);
            for (unsigned long m = 0; m <= N; ++m) {
                geo.set_coeff(m, p);
                p *= BigRational(BigInt(i));
            }
            prod = series_mul(prod, geo);
        }
        for (unsigned long nu = 0; nu <= N; ++nu) {
            BigRational expect(stirling2(nu, k));
            BigRational got = nu >= k ? prod.coeff(nu - k) : BigRational(0);
            CHECK(got == expect);
        }
    }
}
