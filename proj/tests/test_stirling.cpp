#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "couponlab/stirling.hpp"
#include "oracles.hpp"

using namespace couponlab;

TEST_CASE("stirling2 examples") {
    CHECK(stirling2(4, 2) == 7);
    for (long n = 0; n <= 10; ++n) CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(2, 5) == 0);
}

TEST_CASE("stirling2 recurrence agrees with explicit formula up to n = 60") {
    for (long n = 0; n <= 60; ++n)
        for (long k = 0; k <= n; ++k) REQUIRE(stirling2(n, k) == stirling2_explicit(n, k));
}

TEST_CASE("assoc_stirling matches partition enumeration for n <= 12") {
    const oracle::PartitionCounts parts(12);
    for (int h = 1; h <= 3; ++h)
        for (int n = 0; n <= 12; ++n)
            for (int k = 0; k <= n; ++k) {
                INFO("n=" << n << " k=" << k << " h=" << h);
                REQUIRE(assoc_stirling(n, k, h) == parts.get(n, k, h));
            }
    CHECK(assoc_stirling(4, 2, 2) == 3);
    CHECK(assoc_stirling(5, 2, 1) == 15);
    CHECK(assoc_stirling(3, 2, 2) == 0);
}

TEST_CASE("cache invariants") {
    StirlingCache cache;
    for (long h = 1; h <= 4; ++h) {
        CHECK(cache.get(0, 0, h) == 1);
        for (long n = 0; n <= 30; ++n)
            for (long k = 0; k <= n; ++k) {
                const BigInt& v = cache.get(n, k, h);
                CHECK(sgn(v) >= 0);
                if (n < k * h) CHECK(v == 0);
            }
    }
    cache.reserve(50, 2);
    CHECK(cache.rows(2) >= 51);
    CHECK_THROWS_AS(cache.get(3, 1, 0), std::domain_error);
}

TEST_CASE("AssocStirlingStream reproduces the cached table") {
    for (long h = 1; h <= 3; ++h) {
        AssocStirlingStream stream(7, h);
        for (long n = 0; n <= 40; ++n) {
            for (long k = 0; k <= 7; ++k) REQUIRE(stream.at(k) == assoc_stirling(n, k, h));
            stream.advance();
        }
    }
}

TEST_CASE("coeff_A") {
    CHECK(coeff_A(1, 1) == 1);
    CHECK(coeff_A(2, 1) == -1);
    ExactRational s = 0;
    for (long r = 1; r <= 3; ++r) s += coeff_A(3, r) * rpow(ExactRational(r), 2);
    CHECK(s == 25);
    for (long k = 1; k <= 8; ++k)
        for (long n = k; n <= 20; ++n) {
            ExactRational t = 0;
            for (long r = 1; r <= k; ++r) t += coeff_A(k, r) * rpow(ExactRational(r), static_cast<unsigned long>(n - k));
            REQUIRE(t == ExactRational(stirling2(n, k)));
        }
    CHECK_THROWS_AS(coeff_A(3, 0), std::domain_error);
    CHECK_THROWS_AS(coeff_A(3, 4), std::domain_error);
}

namespace {

// sum_{n<=n_max} c_n x^n
template <class Coef>
ExactRational truncated(Coef coef, const ExactRational& x, long n_max) {
    ExactRational s = 0;
    ExactRational p = 1;
    for (long n = 0; n <= n_max; ++n) {
        s += ExactRational(coef(n)) * p;
        p *= x;
    }
    return s;
}

}  // namespace

TEST_CASE("stirling2_gf") {
    CHECK(stirling2_gf(1, ExactRational(1, 2)) == 1);
    // {n brace 2} <= 2^n, so the tail past N is at most sum (2/3)^n
    const ExactRational x(1, 3);
    const long n_max = 200;
    const ExactRational series = truncated([](long n) { return stirling2(n, 2); }, x, n_max);
    const ExactRational tail = rpow(ExactRational(2, 3), n_max + 1) * 3;
    const ExactRational gap = stirling2_gf(2, x) - series;
    CHECK(gap.sign() >= 0);
    CHECK(gap <= tail);
    // outside the disc of convergence the rational function is still evaluated
    CHECK(stirling2_gf(3, ExactRational(2, 5)) == ExactRational(-8, 3));
    // x = 1/2 is the pole m = 2 for k = 3
    CHECK_THROWS_AS(stirling2_gf(3, ExactRational(1, 2)), std::domain_error);
    CHECK_THROWS_AS(stirling2_gf(3, ExactRational(1, 3)), std::domain_error);
}

TEST_CASE("stirling2_sq_gf against truncated series") {
    CHECK(stirling2_sq_gf(1, ExactRational(1, 2)) == 1);
    CHECK(abs(stirling2_sq_gf(2, ExactRational(1, 10)) - truncated([](long n) { return BigInt(stirling2(n, 2) * stirling2(n, 2)); }, ExactRational(1, 10), 200)) < ExactRational(1, 1000000000000LL));
    // 20 points per k with |x| < 1/(2k^2); {n brace k}^2 <= k^{2n}, tail <= (k^2|x|)^{N+1} / (1 - k^2|x|)
    const long n_max = 200;
    for (long k = 1; k <= 5; ++k) {
        for (long i = 1; i <= 20; ++i) {
            const ExactRational x(i * (i % 2 ? 1 : -1), 41 * 2 * k * k);
            const ExactRational series = truncated([k](long n) { return BigInt(stirling2(n, k) * stirling2(n, k)); }, x, n_max);
            const ExactRational ratio = ExactRational(k * k) * abs(x);
            const ExactRational tail = rpow(ratio, n_max + 1) / (ExactRational(1) - ratio);
            INFO("k=" << k << " x=" << x);
            REQUIRE(abs(stirling2_sq_gf(k, x) - series) <= tail);
        }
    }
    const ExactRational x100(1, 100);
    CHECK(abs(stirling2_sq_gf(3, x100) - truncated([](long n) { return BigInt(stirling2(n, 3) * stirling2(n, 3)); }, x100, 200)) < ExactRational(1, 1000000000000LL));
    CHECK_THROWS_AS(stirling2_sq_gf(2, ExactRational(1, 4)), std::domain_error);
}

TEST_CASE("partial_fraction_B") {
    CHECK(partial_fraction_B(1, 1, 1) == 1);
    CHECK(partial_fraction_B(1, 2, 2) == 2);
    CHECK(partial_fraction_B(1, 3, 1) + partial_fraction_B(1, 3, 2) + partial_fraction_B(1, 3, 3) == 1);
    CHECK_THROWS_AS(partial_fraction_B(2, 4, 1), std::domain_error);
    for (long a = 0; a <= 6; ++a)
        for (long b = a; b <= 6; ++b)
            for (long i = 1; i <= 10; ++i) {
                const ExactRational x(i, 97);
                ExactRational lhs = 0;
                ExactRational prod = 1;
                for (long m = a; m <= b; ++m) {
                    lhs += partial_fraction_B(a, b, m) / (ExactRational(1) - ExactRational(m) * x);
                    prod *= ExactRational(1) - ExactRational(m) * x;
                }
                REQUIRE(lhs == ExactRational(1) / prod);
            }
}
