#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "extremal/elliptic.hpp"
#include "oracles.hpp"

using namespace extremal;
using std::numbers::pi;

TEST_CASE("complete_K trivial and frozen values") {
    CHECK(complete_K(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
    // oracle: K(k) = pi/(2 agm(1, k')); frozen from the AGM evaluation
    const double k = std::sqrt(0.5);
    CHECK(complete_K(k) == doctest::Approx(1.8540746773013719).epsilon(1e-14));
    CHECK(complete_K(k) == doctest::Approx(oracle::K_agm(k)).epsilon(1e-14));
}

TEST_CASE("complete_K domain") {
    CHECK_THROWS_AS(complete_K(1.0), std::domain_error);
    CHECK_THROWS_AS(complete_K(1.0 - 1e-16), std::domain_error);
    CHECK_THROWS_AS(complete_K(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(complete_K(std::nan("")), std::invalid_argument);
}

TEST_CASE("complete_E trivial, endpoint and frozen values") {
    CHECK(complete_E(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(complete_E(1.0) == 1.0);
    // frozen from the tanh-sinh oracle of the defining integral
    const double k = 2.0 * std::sqrt(2.0) / 3.0;
    CHECK(complete_E(k) == doctest::Approx(1.1137411017129382).epsilon(1e-14));
    CHECK(complete_E(k) == doctest::Approx(oracle::E_quadrature(k)).epsilon(1e-12));
    CHECK_THROWS_AS(complete_E(1.2), std::invalid_argument);
    CHECK_THROWS_AS(complete_E(-0.5), std::invalid_argument);
}

TEST_CASE("complete_Pi reduces to K at n = 0 and matches quadrature") {
    CHECK(complete_Pi(0.0, 0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
    for (double k : {0.1, 0.3, 0.7, 0.95})
        CHECK(complete_Pi(0.0, k) == doctest::Approx(complete_K(k)).epsilon(1e-15));
    // frozen from the tanh-sinh oracle
    CHECK(complete_Pi(-1.0, 0.5) == doctest::Approx(1.1774468430005662).epsilon(1e-13));
    CHECK_THROWS_AS(complete_Pi(1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(complete_Pi(0.5, 1.0), std::domain_error);
}

TEST_CASE("complete_Pi quadrature consistency on random domain points") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> n_dist(-3.0, 0.95);
    std::uniform_real_distribution<double> k_dist(0.0, 0.95);
    for (int i = 0; i < 100; ++i) {
        const double n = n_dist(rng);
        const double k = k_dist(rng);
        const double got = complete_Pi(n, k);
        const double want = oracle::Pi_quadrature(n, k);
        CHECK(got == doctest::Approx(want).epsilon(1e-10));
    }
}

TEST_CASE("Legendre relation") {
    for (int i = 1; i <= 9; ++i) {
        const double k = 0.1 * i;
        const double kc = std::sqrt((1.0 - k) * (1.0 + k));
        const double residual = complete_E(k) * complete_K(kc) +
                                complete_E(kc) * complete_K(k) -
                                complete_K(k) * complete_K(kc) - pi / 2;
        CHECK(std::fabs(residual) < 1e-12);
    }
}

TEST_CASE("K increasing, E decreasing on [0, 0.999]") {
    double prev_K = complete_K(0.0);
    double prev_E = complete_E(0.0);
    for (int i = 1; i <= 1000; ++i) {
        const double k = 0.999 * i / 1000.0;
        const double cur_K = complete_K(k);
        const double cur_E = complete_E(k);
        CHECK(cur_K > prev_K);
        CHECK(cur_E < prev_E);
        prev_K = cur_K;
        prev_E = cur_E;
    }
}

TEST_CASE("derivative formulas: frozen values and limits") {
    CHECK(dE_dk(0.0) == 0.0);
    CHECK(dK_dk(0.0) == 0.0);
    CHECK(dE_dk(0.6) == doctest::Approx(-0.5544506807783805).epsilon(1e-13));
    CHECK(dK_dk(0.6) == doctest::Approx(0.7750025015172985).epsilon(1e-13));
    // near the divergent endpoint the formula stays finite and positive
    const double d = dK_dk(1.0 - 1e-12);
    CHECK(std::isfinite(d));
    CHECK(d > 0.0);
    CHECK_THROWS_AS(dK_dk(1.0), std::domain_error);
}

TEST_CASE("derivatives match central finite differences") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> k_dist(0.05, 0.9);
    for (int i = 0; i < 100; ++i) {
        const double k = k_dist(rng);
        CHECK(std::fabs(dE_dk(k) - oracle::central_difference(
                                       [](double x) { return complete_E(x); }, k)) <
              1e-7);
        CHECK(std::fabs(dK_dk(k) - oracle::central_difference(
                                       [](double x) { return complete_K(x); }, k)) <
              1e-7);
    }
}

TEST_CASE("dPi derivatives match finite differences; degenerate denominator") {
    CHECK(std::fabs(dPi_dn(-1.0, 0.5) -
                    oracle::central_difference(
                        [](double n) { return complete_Pi(n, 0.5); }, -1.0)) < 1e-7);
    CHECK(std::fabs(dPi_dk(-0.5, 0.3) -
                    oracle::central_difference(
                        [](double k) { return complete_Pi(-0.5, k); }, 0.3)) < 1e-7);
    CHECK_THROWS_AS(dPi_dn(0.09, 0.3), std::domain_error);  // n = k^2
    CHECK_THROWS_AS(dPi_dk(0.09, 0.3), std::domain_error);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> n_dist(-2.0, -0.01);
    std::uniform_real_distribution<double> k_dist(0.1, 0.9);
    for (int i = 0; i < 100; ++i) {
        const double n = n_dist(rng);
        const double k = k_dist(rng);
        CHECK(std::fabs(dPi_dn(n, k) -
                        oracle::central_difference(
                            [k](double nn) { return complete_Pi(nn, k); }, n)) < 1e-7);
        CHECK(std::fabs(dPi_dk(n, k) -
                        oracle::central_difference(
                            [n](double kk) { return complete_Pi(n, kk); }, k)) < 1e-7);
    }
}

TEST_CASE("complete_K_minus_2E is cancellation-free and nonnegative") {
    // exact zero at k = 0, O(k^4) nearby
    CHECK(complete_K_minus_2E(0.0) == 0.0);
    for (double k : {1e-4, 1e-2, 0.1, 0.3, 0.49, 0.51, 0.7, 0.95}) {
        const double v = complete_K_minus_2E(k);
        CHECK(v >= 0.0);
        // leading term pi k^4 / 32
        if (k <= 0.01)
            CHECK(v == doctest::Approx(pi * std::pow(k, 4) / 32.0).epsilon(1e-3));
    }
    // continuity across the hybrid switch at k = 0.5
    CHECK(complete_K_minus_2E(0.5 - 1e-9) ==
          doctest::Approx(complete_K_minus_2E(0.5 + 1e-9)).epsilon(1e-7));
}
