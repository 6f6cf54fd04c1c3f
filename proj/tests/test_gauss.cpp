#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gqs/gauss.hpp"
#include "gqs/validation.hpp"
#include "oracles.hpp"

using namespace gqs;

namespace {

struct RandomInput {
    std::int64_t q, a, n;
    double theta;
};

RandomInput random_valid(std::mt19937_64& rng, std::int64_t q_max) {
    const std::int64_t q = 2 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q_max - 1));
    std::int64_t a = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q - 1));
    while (std::gcd(a, q) != 1) a = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q - 1));
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(q));
    const double theta = 0.5 - static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return {q, a, n, theta};
}

} // namespace

TEST_CASE("gauss_sum_direct examples") {
    // single term: e(x/2 + theta)
    const cdouble s1 = gauss_sum_direct(GaussSumInput::fraction(1, 1, 2, 0.25));
    CHECK(s1.real() == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(s1.imag() == doctest::Approx(0.0).epsilon(1e-12));

    const cdouble s5 = gauss_sum_direct(GaussSumInput::fraction(5, 2, 5, 0.0));
    CHECK(std::abs(s5) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

    const cdouble s4 = gauss_sum_direct(GaussSumInput::fraction(4, 2, 4, 0.0));
    CHECK(s4.real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s4.imag() == doctest::Approx(2.0).epsilon(1e-12));

    CHECK(gauss_sum_direct(GaussSumInput::real(0, 0.3, 0.1)) == cdouble{0.0, 0.0});
}

TEST_CASE("gauss_sum_direct rational and real paths agree") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto in = random_valid(rng, 400);
        const auto rational = GaussSumInput::fraction(in.n, in.a, in.q, in.theta);
        const auto real = GaussSumInput::real(in.n, static_cast<double>(in.a) / in.q, in.theta);
        const cdouble d = gauss_sum_direct(rational) - gauss_sum_direct(real);
        CHECK(std::abs(d) < 1e-8 * static_cast<double>(in.n));
    }
}

TEST_CASE("triangle bound |S| <= N") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto in = random_valid(rng, 1000);
        const double mag = std::abs(gauss_sum_direct(GaussSumInput::fraction(in.n, in.a, in.q, in.theta)));
        CHECK(mag <= static_cast<double>(in.n) * (1.0 + 1e-12));
    }
}

TEST_CASE("periodicity in theta and x") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto in = random_valid(rng, 300);
        const auto base = GaussSumInput::fraction(in.n, in.a, in.q, in.theta);
        auto theta_shift = base;
        theta_shift.theta += 1.0;
        CHECK(std::abs(gauss_sum_direct(base) - gauss_sum_direct(theta_shift)) <
              1e-10 * static_cast<double>(in.n));

        // S(x + 2, theta) = S(x, theta): x + 2 = (a + 2q)/q
        const auto x_shift = GaussSumInput::fraction(in.n, in.a + 2 * in.q, in.q, in.theta);
        CHECK(std::abs(gauss_sum_direct(base) - gauss_sum_direct(x_shift)) <
              1e-10 * static_cast<double>(in.n));
    }
}

TEST_CASE("conjugation identity S_M(-1/x, t/x) = conj(S_M(1/x, -t/x))") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const auto in = random_valid(rng, 200);
        const double x = static_cast<double>(in.a) / in.q;
        const auto lhs = gauss_sum_direct(GaussSumInput::real(in.n, -1.0 / x, in.theta / x));
        const auto rhs = std::conj(gauss_sum_direct(GaussSumInput::real(in.n, 1.0 / x, -in.theta / x)));
        CHECK(std::abs(lhs - rhs) < 1e-10 * static_cast<double>(in.n));
    }
}

TEST_CASE("closed form magnitude") {
    CHECK(gauss_closed_form_magnitude(5, 1, 0) == doctest::Approx(std::sqrt(5.0)));
    CHECK(gauss_closed_form_magnitude(4, 1, 0) == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(gauss_closed_form_magnitude(4, 1, 1) == doctest::Approx(0.0));
    CHECK_THROWS_AS(gauss_closed_form_magnitude(6, 2, 0), ValidationError);

    // against direct complete sums S_q(2a/q, b/q)
    for (std::int64_t q = 2; q <= 30; ++q)
        for (std::int64_t a = 1; a < q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            for (std::int64_t b : {static_cast<std::int64_t>(0), static_cast<std::int64_t>(1), q / 2}) {
                const double direct = std::abs(gauss_sum_direct(GaussSumInput::fraction(
                    q, 2 * a, q, static_cast<double>(b) / static_cast<double>(q))));
                CHECK(direct ==
                      doctest::Approx(gauss_closed_form_magnitude(q, a, b)).epsilon(1e-9));
            }
        }
}

TEST_CASE("E function: value at zero, oracle match, branch coverage") {
    CHECK(std::abs(error_function_E(0.37, 0.0) - cdouble{1.0, 0.0}) < 1e-14);
    CHECK_THROWS_AS(error_function_E(0.0, 0.1), ValidationError);
    CHECK_THROWS_AS(error_function_E(1.0, 0.1), ValidationError);

    int taylor_pts = 0, asym_pts = 0;
    for (int i = 0; i < 40; ++i) {
        const double x = (2.0 * i + 1.0) / 80.0;
        for (int j = 0; j < 41; ++j) {
            const double theta = (j + 1.0) / 41.0 - 0.5;
            const cdouble impl = error_function_E(x, theta);
            const cdouble ref = oracle::E_quadrature(x, theta);
            CHECK(std::abs(impl - ref) < 1e-8);
            if (std::abs(theta) * std::sqrt(M_PI / x) <= 4.5) ++taylor_pts;
            else ++asym_pts;
        }
    }
    CHECK(taylor_pts > 0);
    CHECK(asym_pts > 0);
}

TEST_CASE("E magnitude bounds") {
    double max_nonneg = 0.0, max_all = 0.0;
    for (int i = 0; i < 120; ++i) {
        const double x = (2.0 * i + 1.0) / 240.0;
        for (int j = 0; j < 121; ++j) {
            const double theta = (j + 1.0) / 121.0 - 0.5;
            const double m = std::abs(error_function_E(x, theta));
            max_all = std::max(max_all, m);
            if (theta >= 0.0) max_nonneg = std::max(max_nonneg, m);
        }
    }
    CHECK(max_nonneg <= 2.035);
    // reflected ray; supremum |erfc| on it is ~2.3413
    CHECK(max_all <= 2.3414);
    CHECK(max_all > 2.0); // the negative-theta excursion above 2 is real
}

TEST_CASE("E reflection identity for negative theta") {
    // valid on the open interval: -1/2 itself wraps to +1/2 by convention
    for (const double x : {0.03, 0.2, 0.55, 0.9})
        for (const double t : {0.05, 0.21, 0.4, 0.499}) {
            const cdouble pre = expi2pi(std::fmod(-t * t / (2.0 * x), 1.0));
            const cdouble lhs = error_function_E(x, -t);
            const cdouble rhs = 2.0 * pre - error_function_E(x, t);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }

    // the -1/2 boundary aliases +1/2
    CHECK(std::abs(error_function_E(0.3, -0.5) - error_function_E(0.3, 0.5)) < 1e-14);
}

TEST_CASE("g_correction") {
    CHECK(g_correction(0.0) == 0.0);
    CHECK(g_correction(0.5) == doctest::Approx(-2.0 / M_PI).epsilon(1e-12));
    // series/direct agreement across the switchover
    for (const double t : {1e-4, 3.18e-4, 1e-3, 1.001e-3, 0.01}) {
        const double y = M_PI * t;
        const double direct = std::cos(y) / std::sin(y) - 1.0 / y;
        CHECK(g_correction(t) == doctest::Approx(direct).epsilon(1e-9));
        CHECK(g_correction(-t) == doctest::Approx(-g_correction(t)).epsilon(1e-12));
    }
}

TEST_CASE("paris_decompose: M and epsilon") {
    const auto pd1 = paris_decompose(GaussSumInput::real(10, 0.3, 0.2));
    CHECK(pd1.M == 3);
    CHECK(pd1.epsilon == doctest::Approx(0.2).epsilon(1e-9));

    const auto pd2 = paris_decompose(GaussSumInput::fraction(4, 1, 4, 0.5));
    CHECK(pd2.M == 1);
    CHECK(pd2.epsilon == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("paris_decompose: degenerate M = 0") {
    const auto pd = paris_decompose(GaussSumInput::real(1, 0.3, 0.05));
    CHECK(pd.M == 0);
    CHECK(pd.main_term == cdouble{0.0, 0.0});
    CHECK(std::abs(pd.residual_R) < 0.3);
}

TEST_CASE("paris_decompose: reconstruction and residual") {
    const auto in = GaussSumInput::fraction(50, 17, 97, 0.13);
    const auto pd = paris_decompose(in);
    CHECK(std::abs(pd.residual_R) < 17.0 / 97.0);
    const cdouble direct = gauss_sum_direct(in);
    CHECK(std::abs(pd.reconstructed() - direct) < 1e-12 * 50);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const auto r = random_valid(rng, 500);
        const auto input = GaussSumInput::fraction(r.n, r.a, r.q, r.theta);
        const auto d = paris_decompose(input);
        CHECK(std::abs(d.residual_R) < input.x);
        // N x + theta = M + epsilon
        const double v = static_cast<double>(r.n) * input.x + wrap_half_open(r.theta);
        CHECK(std::abs(static_cast<double>(d.M) + d.epsilon - v) < 1e-9);
    }
}

TEST_CASE("main_term_remainder bound") {
    const auto in1 = GaussSumInput::real(10, 0.3, 0.2);
    CHECK(main_term_remainder(in1) <= 2.035 / std::sqrt(0.3) + 3.0);
    const auto in2 = GaussSumInput::fraction(1, 1, 2, 0.0);
    CHECK(main_term_remainder(in2) <= 2.035 / std::sqrt(0.5) + 3.0);

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const auto r = random_valid(rng, 400);
        const auto input = GaussSumInput::fraction(r.n, r.a, r.q, r.theta);
        CHECK(main_term_remainder(input) <= 2.035 / std::sqrt(input.x) + 3.0);
    }
}

TEST_CASE("explicit_gauss_bound values") {
    CHECK(explicit_gauss_bound(4) == doctest::Approx(43.14).epsilon(1e-4));
    CHECK(explicit_gauss_bound(100) == doctest::Approx(203.7).epsilon(1e-4));
    CHECK(explicit_gauss_bound(10000) == doctest::Approx(2010.0).epsilon(1e-4));
    CHECK_THROWS_AS(explicit_gauss_bound(1), ValidationError);
}

TEST_CASE("reduction_certificate") {
    const auto c12 = reduction_certificate(ReducedFraction(1, 2));
    CHECK(c12.chain.terms == std::vector<std::int64_t>{2, 1});
    CHECK(c12.telescoped_bound ==
          doctest::Approx(std::sqrt(2.0) + 2.035 * std::sqrt(2.0) + 3.0).epsilon(1e-12));
    CHECK(c12.per_level_terms.size() == 1);

    const auto fib = reduction_certificate(ReducedFraction(13, 21));
    CHECK(fib.telescoped_bound <= explicit_gauss_bound(21));
    CHECK(fib.explicit_gauss_bound == doctest::Approx(explicit_gauss_bound(21)));

    const auto c58 = reduction_certificate(ReducedFraction(5, 8));
    CHECK(c58.telescoped_bound <= explicit_gauss_bound(8));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
        const std::int64_t q = 2 + static_cast<std::int64_t>(rng() % 3000);
        std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (q - 1));
        while (std::gcd(a, q) != 1) a = 1 + static_cast<std::int64_t>(rng() % (q - 1));
        const auto cert = reduction_certificate(ReducedFraction(a, q));
        CHECK(cert.telescoped_bound <= cert.explicit_gauss_bound);
        CHECK(cert.per_level_terms.size() == cert.chain.terms.size() - 1);
    }
}

TEST_CASE("gauss_prefix_max matches direct evaluation") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const auto r = random_valid(rng, 300);
        const auto pm = gauss_prefix_max(r.q, r.a, r.theta, r.q);
        double best = -1.0;
        std::int64_t best_n = 0;
        for (std::int64_t n = 1; n <= r.q; ++n) {
            const double m = std::abs(gauss_sum_direct(GaussSumInput::fraction(n, r.a, r.q, r.theta)));
            if (m > best + 1e-12) {
                best = m;
                best_n = n;
            }
        }
        CHECK(pm.value == doctest::Approx(best).epsilon(1e-9));
        CHECK(pm.n == best_n);
    }
}

TEST_CASE("verify_gauss_bound") {
    GaussBoundSweep sweep;
    sweep.explicit_thetas = {0.0};
    const auto r5 = verify_gauss_bound(5, sweep);
    CHECK(r5.pass);
    // exhaustive max over N <= 5 and coprime a at theta = 0 is 1 + sqrt(5),
    // reached at N = 4, a = 4: S_4(4/5, 0) = -sqrt(5) - 1 (the complete sum
    // at N = 5 has magnitude sqrt(5), but the N = 4 prefix overshoots it)
    CHECK(r5.observed_max == doctest::Approx(1.0 + std::sqrt(5.0)).epsilon(1e-9));
    CHECK(r5.witness.at("N").get<std::int64_t>() == 4);
    CHECK(r5.witness.at("a").get<std::int64_t>() == 4);
    CHECK(r5.bound_value == doctest::Approx(20.07 * std::sqrt(5.0) + 3.0));

    const auto r2 = verify_gauss_bound(2, sweep);
    CHECK(r2.pass);
    CHECK(r2.observed_max <= 2.0 + 1e-9);

    GaussBoundSweep sampled;
    sampled.sample_a = 8;
    sampled.theta_grid = 8;
    sampled.seed = 99;
    const auto r997 = verify_gauss_bound(997, sampled);
    CHECK(r997.pass);
    CHECK(r997.stats.at("max_ratio_sqrt_q").get<double>() < 20.07);

    CHECK_THROWS_AS(verify_gauss_bound(1, sweep), ValidationError);
    GaussBoundSweep empty;
    empty.theta_grid = 0;
    CHECK_THROWS_AS(verify_gauss_bound(5, empty), ValidationError);
}
