#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ffsalem/deviation.hpp"

using namespace ffsalem;

TEST_CASE("deviation_bound closed form") {
    SECTION("symmetric case gives 2 e^{-la+l^2 mu2}") {
        const DeviationParams p{100, 0.0, 50.0, 10.0, 0.2};
        CHECK(deviation_bound(p) ==
              Catch::Approx(2.0 * std::exp(-0.2 * 10.0 + 0.04 * 50.0)).epsilon(1e-14));
    }
    SECTION("vanishing exponent is vacuous") {
        const DeviationParams p{10, 0.0, 0.0, 1e-300, 0.5};
        CHECK(deviation_bound(p) == Catch::Approx(2.0).epsilon(1e-12));
    }
    SECTION("asymmetric mu1") {
        const DeviationParams p{10, 2.0, 5.0, 3.0, 0.5};
        const double expected =
            std::exp(-1.5 + 0.25 * 5.0) * (std::exp(1.0) + std::exp(-1.0));
        CHECK(deviation_bound(p) == Catch::Approx(expected).epsilon(1e-14));
    }
    SECTION("parameter validation") {
        CHECK_THROWS_AS(deviation_bound(DeviationParams{10, 0.0, 5.0, 1.0, 0.0}), input_error);
        CHECK_THROWS_AS(deviation_bound(DeviationParams{10, 0.0, 5.0, 1.0, 1.0}), input_error);
        CHECK_THROWS_AS(deviation_bound(DeviationParams{10, 0.0, -1.0, 1.0, 0.5}), input_error);
        CHECK_THROWS_AS(deviation_bound(DeviationParams{10, 11.0, 5.0, 1.0, 0.5}), input_error);
    }
}

TEST_CASE("deviation_bound monotonicity") {
    // decreasing in alpha, increasing in mu2, at fixed lambda and mu1
    for (int i = 0; i < 50; ++i) {
        const double lambda = 0.05 + 0.018 * i;
        const double mu2 = 1.0 + 3.0 * i;
        const double alpha = 0.5 + 0.7 * i;
        const DeviationParams base{1000, 0.0, mu2, alpha, lambda};
        DeviationParams more_alpha = base;
        more_alpha.alpha = alpha * 1.5;
        DeviationParams more_mu2 = base;
        more_mu2.mu2 = mu2 * 1.5;
        CHECK(deviation_bound(more_alpha) < deviation_bound(base));
        CHECK(deviation_bound(more_mu2) > deviation_bound(base));
    }
}

TEST_CASE("proof_mu2") {
    CHECK(proof_mu2(49, 0.5) == Catch::Approx(12.25).epsilon(1e-15));
    CHECK(proof_mu2(1000, 0.1) == Catch::Approx(50.0).epsilon(1e-15));
    CHECK(proof_mu2(100, 1e-12) == Catch::Approx(5e-11).epsilon(1e-12));
    CHECK_THROWS_AS(proof_mu2(49, 0.0), input_error);
}

TEST_CASE("main_threshold") {
    CHECK(main_threshold(49, 0.3, 1.0) ==
          Catch::Approx(2.0 * std::sqrt(2.0 * 0.3 * 49.0 * std::log(49.0))).epsilon(1e-15));
    CHECK(main_threshold(49, 0.3, 1.0) == Catch::Approx(21.40).margin(0.01));
    // epsilon -> 0 limit
    CHECK(main_threshold(100, 0.5, 1e-12) ==
          Catch::Approx(2.0 * std::sqrt(0.5 * 100.0 * std::log(100.0))).epsilon(1e-9));
}

TEST_CASE("main_threshold equals sqrt(2) alpha") {
    for (std::uint64_t n : {49ull, 343ull, 15625ull}) {
        for (double delta : {0.1, 0.3, 0.7}) {
            for (double eps : {0.5, 1.0, 2.0}) {
                const TheoremParams tp = TheoremParams::create(n, delta, eps);
                CHECK(main_threshold(n, delta, eps) ==
                      Catch::Approx(std::sqrt(2.0) * tp.alpha).epsilon(1e-14));
            }
        }
    }
}

TEST_CASE("theorem params flag the lambda > 1 regime") {
    CHECK(TheoremParams::create(15625, 0.5, 1.0).lambda_valid);
    // tiny n, tiny delta: alpha exceeds n*delta
    CHECK_FALSE(TheoremParams::create(4, 0.1, 2.0).lambda_valid);
}

TEST_CASE("hayes_threshold") {
    CHECK(hayes_threshold(8, 49, 1.0) ==
          Catch::Approx(2.0 * std::sqrt(32.0 * std::log(49.0))).epsilon(1e-15));
    CHECK(hayes_threshold(8, 49, 1.0) == Catch::Approx(22.32).margin(0.01));
    CHECK_THROWS_AS(hayes_threshold(25, 49, 1.0), input_error);
    CHECK_THROWS_AS(hayes_threshold(0, 49, 1.0), input_error);
    // strictly increasing in m, n, epsilon
    CHECK(hayes_threshold(9, 49, 1.0) > hayes_threshold(8, 49, 1.0));
    CHECK(hayes_threshold(8, 50, 1.0) > hayes_threshold(8, 49, 1.0));
    CHECK(hayes_threshold(8, 49, 1.5) > hayes_threshold(8, 49, 1.0));
}

TEST_CASE("failure_prob_bound") {
    CHECK(failure_prob_bound(49, 1.0) == Catch::Approx(4.0 / 49.0).epsilon(1e-15));
    CHECK(failure_prob_bound(2, 1.0) == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(failure_prob_bound(49, 50.0) < 1e-80);
}

TEST_CASE("chebyshev_size_bound") {
    CHECK(chebyshev_size_bound(100, 0.5) == Catch::Approx(0.04).epsilon(1e-15));
    CHECK(chebyshev_size_bound(49, 0.3) == Catch::Approx(4.0 * 0.7 / 14.7).epsilon(1e-15));
    CHECK(chebyshev_size_bound(100, 1.0 - 1e-13) < 1e-11);
}

TEST_CASE("deviation bound reduces to 2 n^{-(1+eps)} under the proof substitutions") {
    for (std::uint64_t n : {343ull, 2401ull, 15625ull}) {
        for (double delta : {0.3, 0.5, 0.7}) {
            for (double eps : {0.5, 1.0, 2.0}) {
                const TheoremParams tp = TheoremParams::create(n, delta, eps);
                REQUIRE(tp.lambda_valid);
                const DeviationParams dp{n, 0.0, proof_mu2(n, delta), tp.alpha, tp.lambda};
                const double expected =
                    2.0 * std::pow(static_cast<double>(n), -(1.0 + eps));
                CHECK(deviation_bound(dp) == Catch::Approx(expected).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("cosine identities") {
    SECTION("p=3, d=1, xi=1 exactly") {
        const SpaceParams s = SpaceParams::create(3, 1);
        const CosineIdentityResult r = cosine_identity_check(s, 1);
        CHECK(r.cos_sum_abs < 1e-12);
        CHECK(r.cos_sq_dev < 1e-12);
        CHECK(r.sin_sum_abs < 1e-12);
        CHECK(r.sin_sq_dev < 1e-12);
        CHECK(r.square_identity_valid);
    }
    SECTION("p=5, d=2, all nonzero frequencies") {
        const SpaceParams s = SpaceParams::create(5, 2);
        for (std::uint64_t xi = 1; xi < s.n; ++xi) {
            const CosineIdentityResult r = cosine_identity_check(s, xi);
            CHECK(r.cos_sum_abs < 1e-10);
            CHECK(r.cos_sq_dev < 1e-10);
            CHECK(r.sin_sum_abs < 1e-10);
            CHECK(r.sin_sq_dev < 1e-10);
        }
    }
    SECTION("p=2 breaks the squared-sum identity and is flagged") {
        const SpaceParams s = SpaceParams::create(2, 1);
        const CosineIdentityResult r = cosine_identity_check(s, 1);
        CHECK(r.cos_sum_abs < 1e-12);
        CHECK(r.cos_sq_dev == Catch::Approx(1.0).margin(1e-12));  // 2 - n/2
        CHECK_FALSE(r.square_identity_valid);
    }
    SECTION("xi = 0 is rejected") {
        CHECK_THROWS_AS(cosine_identity_check(SpaceParams::create(3, 1), 0), input_error);
    }
}
