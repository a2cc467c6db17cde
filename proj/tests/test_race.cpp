#include <doctest.h>

#include <stdexcept>

#include "couponlab/race.hpp"
#include "oracles.hpp"

using namespace couponlab;

TEST_CASE("path_prob") {
    LatticePath p{{0, 0}, {Step::Northeast, Step::Horizontal}};
    CHECK(path_prob(p, 2) == ExactRational(1, 2));
    CHECK(p.end() == Vertex{2, 1});
    CHECK(p.vertices().size() == 3);
    CHECK(path_prob(LatticePath{{0, 0}, {Step::Horizontal, Step::Northeast}}, 3) == 0);
    CHECK(path_prob(LatticePath{{4, 2}, {}}, 3) == 1);
    CHECK_THROWS_AS(path_prob(LatticePath{{0, 0}, {Step::Northeast, Step::Northeast, Step::Northeast}}, 2),
                    std::domain_error);
}

TEST_CASE("sum_paths_prob") {
    CHECK(sum_paths_prob({0, 0}, {2, 1}, 2) == ExactRational(1, 2));
    CHECK(sum_paths_prob({3, 2}, {3, 2}, 4) == 1);
    CHECK_THROWS_AS(sum_paths_prob({0, 0}, {1, 2}, 3), std::domain_error);
    CHECK_THROWS_AS(sum_paths_prob({2, 1}, {1, 1}, 3), std::domain_error);
    CHECK_THROWS_AS(sum_paths_prob({0, 0}, {5, 4}, 3), std::domain_error);
    for (long d = 1; d <= 4; ++d)
        for (long a1 = 0; a1 <= 4; ++a1)
            for (long b1 = 0; b1 <= std::min(a1, d); ++b1)
                for (long a2 = a1; a2 <= 9; ++a2)
                    for (long b2 = b1; b2 <= std::min(d, b1 + a2 - a1); ++b2)
                        REQUIRE(sum_paths_prob({a1, b1}, {a2, b2}, d) == oracle::path_sum({a1, b1}, {a2, b2}, d));
}

TEST_CASE("single-collector completion from path sums") {
    const long d = 3;
    for (long n = 1; n <= 8; ++n) {
        const ExactRational via_paths = n >= d ? sum_paths_prob({0, 0}, {n - 1, d - 1}, d) * ExactRational(1, d) : ExactRational(0);
        REQUIRE(via_paths == oracle::enumerate_sequences(d, 1, n).completion);
    }
}

TEST_CASE("gv_entries") {
    const auto m = gv_entries(3, 1, 2, 1, 5);
    CHECK(m.a11 == sum_paths_prob({2, 2}, {4, 2}, 3));
    CHECK(m.a12 == sum_paths_prob({2, 2}, {5, 2}, 3));
    CHECK(m.a21 == sum_paths_prob({2, 1}, {4, 2}, 3));
    CHECK(m.a22 == sum_paths_prob({2, 1}, {5, 2}, 3));
    CHECK(gv_entries(3, 2, 2, 1, 4).a12 == 0);
    const auto small = gv_entries(2, 1, 1, 1, 4);
    CHECK(small.a11 == oracle::path_sum({2, 2}, {3, 1}, 2));
    CHECK(small.a12 == oracle::path_sum({2, 2}, {4, 1}, 2));
    CHECK(small.a21 == oracle::path_sum({2, 1}, {3, 1}, 2));
    CHECK(small.a22 == oracle::path_sum({2, 1}, {4, 1}, 2));
    CHECK_THROWS_AS(gv_entries(3, 2, 1, 1, 5), std::domain_error);
    CHECK_THROWS_AS(gv_entries(3, 1, 3, 1, 5), std::domain_error);
    CHECK_THROWS_AS(gv_entries(3, 1, 2, 4, 5), std::domain_error);
    CHECK_THROWS_AS(gv_entries(4, 1, 2, 1, 3), std::domain_error);
}

TEST_CASE("gv_det equals the direct determinant and nonintersecting pairs") {
    CHECK(gv_det(4, 1, 2, 2, 7) == gv_entries(4, 1, 2, 2, 7).det());
    for (long n = 3; n <= 8; ++n) CHECK(gv_det(2, 1, 1, n - 2, n) == oracle::nonintersecting_pairs(2, 1, 1, n - 2, n));
    CHECK(gv_det(2, 1, 1, 2, 4) == 0);
    for (long d = 2; d <= 3; ++d)
        for (long n = d; n <= 8; ++n)
            for (long k = 1; k <= n - 2; ++k)
                for (long d1 = 1; d1 <= d - 1; ++d1)
                    for (long d2 = d1; d2 <= d - 1; ++d2) {
                        INFO("d=" << d << " d1=" << d1 << " d2=" << d2 << " k=" << k << " n=" << n);
                        REQUIRE(gv_det(d, d1, d2, k, n) == oracle::nonintersecting_pairs(d, d1, d2, k, n));
                        REQUIRE(gv_det(d, d1, d2, k, n) == gv_entries(d, d1, d2, k, n).det());
                    }
}

TEST_CASE("init_seg") {
    CHECK(init_seg(2, 1, 1) == 1);
    CHECK(init_seg(2, 1, 2) == ExactRational(1, 4));
    CHECK(init_seg(3, 2, 3) == oracle::squared_path_sum({0, 0}, {3, 2}, 3));
    CHECK(init_seg(3, 2, 1) == 0);
    for (long d = 1; d <= 4; ++d)
        for (long d1 = 1; d1 <= d; ++d1)
            for (long k = d1; k <= 9; ++k) REQUIRE(init_seg(d, d1, k) == oracle::squared_path_sum({0, 0}, {k, d1}, d));
}

TEST_CASE("psi against its defining series") {
    auto check = [](long d, long r, long s, long t) {
        const ExactRational closed = psi(d, r, s, t);
        const ExactRational eps(1, BigInt("1000000000000000000000000000000"));
        long n_max = 50;
        auto series = oracle::psi_series(d, r, s, t, n_max);
        while (!(series.tail_bound < eps)) {
            n_max *= 2;
            series = oracle::psi_series(d, r, s, t, n_max);
        }
        const ExactRational gap = closed - series.partial;
        INFO("d=" << d << " r=" << r << " s=" << s << " t=" << t);
        CHECK(gap.sign() >= 0);
        CHECK(gap <= series.tail_bound);
    };
    check(3, 1, 1, 2);
    check(2, 1, 1, 1);
    check(5, 2, 2, 2);
    check(4, 3, 3, 3);
    CHECK_THROWS_AS(psi(3, 3, 1, 1), std::domain_error);
    CHECK_THROWS_AS(psi(3, 1, 3, 3), std::domain_error);
    CHECK_THROWS_AS(psi(3, 1, 0, 1), std::domain_error);
}

TEST_CASE("loser-height identity") {
    for (long d = 1; d <= 12; ++d)
        for (long d1 = 1; d1 <= d; ++d1)
            for (long t = d1; t <= d - 1; ++t) REQUIRE(loser_height_sum(d, d1, t) == loser_height_sum_closed(d, d1, t));
    // at t = d the summed side vanishes but the closed side does not
    for (long d = 2; d <= 12; ++d)
        for (long d1 = 1; d1 <= d - 1; ++d1) {
            CHECK(loser_height_sum(d, d1, d) == 0);
            CHECK(loser_height_sum_closed(d, d1, d) != 0);
        }
}

TEST_CASE("simultaneous_finish_prob") {
    CHECK(simultaneous_finish_prob(1) == 1);
    CHECK(simultaneous_finish_prob(2) == ExactRational(1, 3));
    CHECK(simultaneous_finish_prob(3) == ExactRational(11, 70));
    CHECK(simultaneous_finish_prob(5) == ExactRational(688877, 9561123));
    for (long d = 1; d <= 6; ++d) {
        REQUIRE(simultaneous_finish_prob(d) == oracle::race_chain(d, oracle::ChainEvent::Simultaneous));
        // sum_{n<=N} p(n,d)^2 plus tail <= P(T > N) <= d (1 - 1/d)^N
        const long n_max = 60 * d;
        ExactRational partial = 0;
        for (long n = d; n <= n_max; ++n) {
            const ExactRational p = n == 1 ? ExactRational(d == 1) : sum_paths_prob({0, 0}, {n - 1, d - 1}, d) * ExactRational(1, d);
            partial += p * p;
        }
        const ExactRational tail = ExactRational(d) * rpow(ExactRational(d - 1, d), n_max);
        const ExactRational gap = simultaneous_finish_prob(d) - partial;
        CHECK(gap.sign() >= 0);
        CHECK(gap <= tail);
    }
    for (long d = 1; d < 10; ++d) CHECK(simultaneous_finish_prob(d + 1) < simultaneous_finish_prob(d));
}

TEST_CASE("tie_then_ahead_prob") {
    CHECK(tie_then_ahead_prob(1) == 1);
    CHECK(tie_then_ahead_prob(2) == ExactRational(2, 3));
    CHECK(tie_then_ahead_prob(3) == ExactRational(43, 70));
    CHECK(tie_then_ahead_prob(4) == ExactRational(986, 2275));
    CHECK(tie_then_ahead_prob(5) == ExactRational(5672893, 19122246));
    for (long d = 1; d <= 8; ++d) {
        INFO("d=" << d);
        const ExactRational p = tie_then_ahead_prob(d);
        REQUIRE(p == oracle::race_chain(d, oracle::ChainEvent::TieThenAhead));
        CHECK(p.sign() >= 0);
        CHECK(p <= 1);
    }
}

TEST_CASE("frame_prob") {
    CHECK(frame_prob(2, 1, 4, 2, 2) == ExactRational(1, 8));
    for (long d = 1; d <= 5; ++d) CHECK(frame_prob(0, 0, 2, 1, d) == 0);
    CHECK(frame_prob(0, 1, 1, 2, 3) == 0);
    CHECK(frame_prob(0, 1, 4, 1, 3) == 0);
    for (long d = 1; d <= 3; ++d)
        for (long i1 = 0; i1 <= 3; ++i1)
            for (long j1 = 0; j1 <= std::min(i1, d); ++j1)
                for (long i2 = i1 + 2; i2 <= i1 + 5; ++i2)
                    for (long j2 = j1 + 1; j2 <= std::min(d, j1 + i2 - i1 - 1); ++j2) {
                        INFO("d=" << d << " (" << i1 << "," << j1 << ")->(" << i2 << "," << j2 << ")");
                        REQUIRE(frame_prob(i1, j1, i2, j2, d) == oracle::frame_pairs({i1, j1}, {i2, j2}, d));
                    }
}

TEST_CASE("tail_prob") {
    CHECK(tail_prob(0, 0, 4, 2, 3) == init_seg(3, 2, 4));
    CHECK(tail_prob(3, 2, 3, 2, 3) == 1);
    CHECK(tail_prob(3, 2, 2, 2, 3) == 0);
    CHECK(tail_prob(0, 0, 2, 3, 3) == 0);
    for (long d = 1; d <= 3; ++d)
        for (long i1 = 0; i1 <= 3; ++i1)
            for (long j1 = 0; j1 <= std::min(i1, d); ++j1)
                for (long i2 = i1; i2 <= i1 + 6; ++i2)
                    for (long j2 = j1; j2 <= std::min(d, j1 + i2 - i1); ++j2)
                        REQUIRE(tail_prob(i1, j1, i2, j2, d) == oracle::squared_path_sum({i1, j1}, {i2, j2}, d));
}

TEST_CASE("ribbon_prob") {
    CHECK(ribbon_prob(3, 2, 1, 1, 5) == gv_det(3, 1, 2, 1, 5));
    CHECK(ribbon_prob(2, 1, 1, 2, 4) == 0);
    for (long n = 3; n <= 8; ++n)
        for (long k = 1; k <= n - 2; ++k)
            for (long dpp = 1; dpp <= 2; ++dpp)
                for (long dprime = dpp; dprime <= 2; ++dprime)
                    REQUIRE(ribbon_prob(3, dprime, dpp, k, n) == oracle::nonintersecting_pairs(3, dpp, dprime, k, n));
}
