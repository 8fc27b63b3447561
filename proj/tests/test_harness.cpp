#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ffsalem/harness.hpp"
#include "oracle.hpp"

using namespace ffsalem;

TEST_CASE("percolation experiment basics") {
    const SpaceParams s = SpaceParams::create(5, 2);
    SECTION("single trial gives a 0/1 frequency") {
        const auto r = percolation_tail_experiment(s, 0.3, 1.0, 1, 7);
        CHECK((r.summary.empirical_prob == 0.0 || r.summary.empirical_prob == 1.0));
        CHECK(r.records.size() == 1);
    }
    SECTION("summary is deterministic under a fixed master seed") {
        const auto a = percolation_tail_experiment(s, 0.3, 1.0, 300, 42);
        const auto b = percolation_tail_experiment(s, 0.3, 1.0, 300, 42);
        CHECK(a.summary.exceed_count == b.summary.exceed_count);
        CHECK(a.summary.empirical_prob == b.summary.empirical_prob);
    }
    SECTION("result is independent of the worker count") {
        const auto a = percolation_tail_experiment(s, 0.3, 1.0, 500, 42, 1, 1);
        const auto b = percolation_tail_experiment(s, 0.3, 1.0, 500, 42, 1, 4);
        const auto c = percolation_tail_experiment(s, 0.3, 1.0, 500, 42, 1, 7);
        CHECK(a.summary.exceed_count == b.summary.exceed_count);
        CHECK(a.summary.exceed_count == c.summary.exceed_count);
        for (std::size_t i = 0; i < a.records.size(); ++i) {
            CHECK(a.records[i].statistic == b.records[i].statistic);
            CHECK(a.records[i].statistic == c.records[i].statistic);
        }
    }
    SECTION("record invariant: exceeded <=> statistic >= threshold") {
        const auto r = percolation_tail_experiment(s, 0.4, 0.5, 200, 3);
        for (const auto& rec : r.records)
            CHECK(rec.exceeded == (rec.statistic >= rec.threshold));
    }
}

TEST_CASE("uniform experiment basics") {
    const SpaceParams s = SpaceParams::create(5, 2);
    CHECK_THROWS_AS(uniform_tail_experiment(s, 13, 1.0, 10, 0), input_error);
    const auto boundary = uniform_tail_experiment(s, 12, 1.0, 50, 0);
    CHECK(boundary.summary.trials == 50);
    const auto a = uniform_tail_experiment(s, 8, 1.0, 200, 9, 1, 1);
    const auto b = uniform_tail_experiment(s, 8, 1.0, 200, 9, 1, 3);
    CHECK(a.summary.exceed_count == b.summary.exceed_count);
    for (const auto& rec : a.records) CHECK(rec.cardinality == 8);
}

TEST_CASE("real/imag tail experiment") {
    const SpaceParams s = SpaceParams::create(5, 2);
    SECTION("huge alpha (large epsilon) gives zero exceedances") {
        const auto r = real_imag_tail_experiment(s, 0.3, 50.0, 200, 1, 5);
        CHECK(r.real_summary.exceed_count == 0);
        CHECK(r.imag_summary.exceed_count == 0);
    }
    SECTION("probe frequency must be nonzero") {
        CHECK_THROWS_AS(real_imag_tail_experiment(s, 0.3, 1.0, 10, 0, 5), input_error);
    }
    SECTION("re and im tails agree within Monte Carlo error") {
        const auto r = real_imag_tail_experiment(s, 0.3, 0.2, 5000, 1, 5);
        const double diff =
            std::abs(r.real_summary.empirical_prob - r.imag_summary.empirical_prob);
        CHECK(diff <= 3.0 * std::sqrt(0.5 / 5000.0) + 0.01);
    }
}

TEST_CASE("expectation identity experiment") {
    const SpaceParams s = SpaceParams::create(5, 2);
    const auto r = expectation_identity_experiment(s, 0.5, 20'000, 6, 11);
    CHECK(r.expected_sq == Catch::Approx(6.25).epsilon(1e-12));
    CHECK(r.mean_ok);
    CHECK(r.sq_ok);
    CHECK(r.pass);
    // delta(1-delta) ordering sanity: the delta=0.1 run has smaller mean |E^|^2
    const auto small = expectation_identity_experiment(s, 0.1, 20'000, 6, 11);
    CHECK(small.mean_sq < r.mean_sq);
    CHECK_THROWS_AS(expectation_identity_experiment(s, 0.5, 10, 0, 1), input_error);
}

TEST_CASE("size concentration experiment") {
    const SpaceParams s = SpaceParams::create(7, 2);
    const auto a = size_concentration_experiment(s, 0.5, 20'000, 13);
    CHECK(a.summary.theoretical_bound == Catch::Approx(4.0 * 0.5 / 24.5).epsilon(1e-12));
    CHECK(a.summary.pass);
    const auto b = size_concentration_experiment(s, 0.5, 20'000, 13);
    CHECK(a.summary.exceed_count == b.summary.exceed_count);
}

TEST_CASE("lemma oracle experiment") {
    SECTION("vacuous Rademacher bound trivially passes") {
        VariableSpec spec;
        spec.family = VariableSpec::Family::rademacher;
        spec.N = 100;
        const auto r = lemma_oracle_experiment(spec, 30.0, 0.3, 1000, 5);
        CHECK(r.bound == Catch::Approx(2.0).epsilon(1e-12));  // 2 e^{-9+9}
        CHECK(r.pass);
    }
    SECTION("Rademacher at the optimized lambda") {
        VariableSpec spec;
        spec.family = VariableSpec::Family::rademacher;
        spec.N = 100;
        const auto r = lemma_oracle_experiment(spec, 30.0, 0.15, 100'000, 5);
        CHECK(r.bound == Catch::Approx(2.0 * std::exp(-2.25)).epsilon(1e-12));
        // true tail is ~0.0035 by the normal approximation, far below the bound
        CHECK(r.empirical_prob < 0.01);
        CHECK(r.empirical_prob > 0.0005);
        CHECK(r.pass);
    }
    SECTION("centered Bernoulli family") {
        VariableSpec spec;
        spec.family = VariableSpec::Family::centered_bernoulli;
        spec.N = 200;
        spec.q = 0.3;
        const auto r = lemma_oracle_experiment(spec, 25.0, 0.2, 50'000, 8);
        CHECK(r.params.mu1 == 0.0);
        CHECK(r.params.mu2 == Catch::Approx(200.0 * 0.3 * 0.7 / 0.49).epsilon(1e-12));
        CHECK(r.pass);
        spec.q = 0.0;
        CHECK_THROWS_AS(lemma_oracle_experiment(spec, 25.0, 0.2, 10, 8), input_error);
    }
    SECTION("cosine-weighted family matches the per-frequency tail experiment") {
        const SpaceParams s = SpaceParams::create(7, 2);
        VariableSpec spec;
        spec.family = VariableSpec::Family::cosine_weighted;
        spec.space = s;
        spec.delta = 0.3;
        spec.xi = 1;
        const TheoremParams tp = TheoremParams::create(s.n, 0.3, 0.5);
        REQUIRE(tp.lambda_valid);
        const auto r = lemma_oracle_experiment(spec, tp.alpha, tp.lambda, 20'000, 17);
        CHECK(r.params.mu2 == Catch::Approx(proof_mu2(s.n, 0.3)).margin(1e-9));
        CHECK(std::abs(r.params.mu1) < 1e-9);
        // the sum is exactly the real part of E^(xi) for the same seeds
        const auto tails = real_imag_tail_experiment(s, 0.3, 0.5, 20'000, 1, 17);
        CHECK(r.exceed_count == tails.real_summary.exceed_count);
        CHECK(r.pass);
    }
}

TEST_CASE("explorer") {
    SECTION("m=1 gives ratio 1 at the index-0 singleton") {
        const SpaceParams s = SpaceParams::create(5, 1);
        const auto r = conjecture_explore(s, 1, ExploreMode::exhaustive);
        CHECK(r.best_ratio == Catch::Approx(1.0).margin(1e-9));
        CHECK(r.evaluations == 5);
        CHECK(r.best_set.contains(0));
        CHECK(r.best_set.cardinality() == 1);
    }
    SECTION("exhaustive matches an independent enumeration oracle") {
        const SpaceParams s = SpaceParams::create(5, 1);
        const auto r = conjecture_explore(s, 2, ExploreMode::exhaustive);
        CHECK(r.evaluations == 10);
        // oracle: recursive enumeration in the same lexicographic order
        double best = 1e300;
        PointSet best_set(s);
        for (std::uint64_t a = 0; a < s.n; ++a) {
            for (std::uint64_t b = a + 1; b < s.n; ++b) {
                PointSet E(s);
                E.set(a, true);
                E.set(b, true);
                if (const double ratio = salem_ratio(E); ratio < best - kExploreTieEps) {
                    best = ratio;
                    best_set = E;
                }
            }
        }
        CHECK(r.best_ratio == best);
        CHECK(r.best_set == best_set);
    }
    SECTION("lower bound from the Fourier sandwich") {
        const SpaceParams s = SpaceParams::create(3, 2);
        for (std::uint64_t m : {1ull, 2ull, 3ull, 4ull}) {
            const auto r = conjecture_explore(s, m, ExploreMode::exhaustive);
            CHECK(r.best_ratio >= 1.0 / std::sqrt(2.0) - 1e-6);
        }
    }
    SECTION("budget overrun raises a resource error") {
        const SpaceParams s = SpaceParams::create(7, 2);
        CHECK_THROWS_AS(conjecture_explore(s, 20, ExploreMode::exhaustive, 1000),
                        resource_error);
    }
    SECTION("local search never beats the exhaustive minimum") {
        const SpaceParams s = SpaceParams::create(5, 1);
        const auto global = conjecture_explore(s, 2, ExploreMode::exhaustive);
        const auto local = conjecture_explore(s, 2, ExploreMode::local, 50, 3);
        CHECK(local.best_ratio >= global.best_ratio - 1e-12);
        CHECK(local.evaluations <= 50);
        CHECK(local.best_set.cardinality() == 2);
    }
}
