#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "ffsalem/constructions.hpp"
#include "ffsalem/deviation.hpp"
#include "ffsalem/errors.hpp"
#include "ffsalem/pointset.hpp"
#include "ffsalem/rng.hpp"
#include "ffsalem/sampling.hpp"
#include "ffsalem/space.hpp"
#include "ffsalem/spectral.hpp"

namespace ffsalem {

inline constexpr const char* kVersionTag = "ffsalem-1.0.0";

// One Monte Carlo trial. `statistic` is the quantity the experiment compares
// against `threshold` (Phi for the tail experiments, the size deviation for
// the concentration experiment); exceeded <=> statistic >= threshold.
struct TrialRecord {
    std::uint64_t stream_id = 0;
    std::uint64_t cardinality = 0;
    double statistic = 0.0;
    double threshold = 0.0;
    bool exceeded = false;
    double real_part_abs = 0.0;  // |Re E^(xi)| at the probe frequency
    double imag_part_abs = 0.0;
};

struct ExperimentSummary {
    std::uint64_t trials = 0;
    std::uint64_t exceed_count = 0;
    double empirical_prob = 0.0;
    double theoretical_bound = 0.0;
    bool pass = false;
    double wall_time_s = 0.0;
    std::uint64_t master_seed = 0;
};

// One-sided 3-standard-error slack on the empirical frequency.
inline double bound_slack(double bound, std::uint64_t trials) {
    const double b = std::clamp(bound, 0.0, 1.0);
    return 3.0 * std::sqrt(b * (1.0 - b) / static_cast<double>(trials));
}

inline ExperimentSummary summarize(const std::vector<TrialRecord>& records, double bound,
                                   std::uint64_t master_seed, double wall_time_s) {
    ExperimentSummary s;
    s.trials = records.size();
    for (const TrialRecord& r : records) s.exceed_count += r.exceeded ? 1 : 0;
    s.empirical_prob = static_cast<double>(s.exceed_count) / static_cast<double>(s.trials);
    s.theoretical_bound = bound;
    s.pass = bound >= 1.0 || s.empirical_prob <= bound + bound_slack(bound, s.trials);
    s.wall_time_s = wall_time_s;
    s.master_seed = master_seed;
    return s;
}

namespace detail {

// Runs fn(t) for t in [0, trials) across `jobs` threads on disjoint blocks.
// Each trial writes only its own slot, so the result is independent of jobs.
template <class Fn>
void parallel_trials(std::uint64_t trials, unsigned jobs, Fn&& fn) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, trials));
    if (jobs <= 1) {
        for (std::uint64_t t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    const std::uint64_t chunk = (trials + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([lo, hi, &fn] {
            for (std::uint64_t t = lo; t < hi; ++t) fn(t);
        });
    }
    for (std::thread& w : workers) w.join();
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace detail

struct TailExperimentResult {
    ExperimentSummary summary;
    std::vector<TrialRecord> records;
};

// Theorem-style percolation experiment: per trial, sample Omega(F_p^d, delta),
// compute Phi, compare with the percolation threshold; the exceedance
// frequency is checked against 4*n^{-eps}.
inline TailExperimentResult percolation_tail_experiment(const SpaceParams& space, double delta,
                                                        double epsilon, std::uint64_t trials,
                                                        std::uint64_t master_seed,
                                                        std::uint64_t probe_xi = 1,
                                                        unsigned jobs = 0) {
    if (trials < 1) throw input_error("trials must be >= 1");
    if (probe_xi == 0 || probe_xi >= space.n) throw input_error("probe frequency must be nonzero");
    const double threshold = main_threshold(space.n, delta, epsilon);
    const double bound = failure_prob_bound(space.n, epsilon);
    detail::Timer timer;
    std::vector<TrialRecord> records(trials);
    detail::parallel_trials(trials, jobs, [&](std::uint64_t t) {
        const PointSet E = sample_bernoulli(space, delta, SeedSpec{master_seed, t});
        const Spectrum spec = dft_of_set(E);
        const PhiResult ph = phi_of_spectrum(spec, E.cardinality());
        const cplx probe = spec.coeffs[probe_xi];
        records[t] = TrialRecord{t,
                                 E.cardinality(),
                                 ph.phi,
                                 threshold,
                                 ph.phi >= threshold,
                                 std::abs(probe.real()),
                                 std::abs(probe.imag())};
    });
    const double secs = timer.seconds();
    return TailExperimentResult{summarize(records, bound, master_seed, secs), std::move(records)};
}

// Uniform m-subset experiment against the Hayes threshold. The paper hides
// the O(p^{-d eps}) constant, so the bound is instantiated with constant 1
// and the implied constant can be read off empirical_prob / n^{-eps}.
inline TailExperimentResult uniform_tail_experiment(const SpaceParams& space, std::uint64_t m,
                                                    double epsilon, std::uint64_t trials,
                                                    std::uint64_t master_seed,
                                                    std::uint64_t probe_xi = 1,
                                                    unsigned jobs = 0) {
    if (trials < 1) throw input_error("trials must be >= 1");
    if (probe_xi == 0 || probe_xi >= space.n) throw input_error("probe frequency must be nonzero");
    const double threshold = hayes_threshold(m, space.n, epsilon);
    const double bound = std::pow(static_cast<double>(space.n), -epsilon);
    detail::Timer timer;
    std::vector<TrialRecord> records(trials);
    detail::parallel_trials(trials, jobs, [&](std::uint64_t t) {
        const PointSet E = sample_uniform_m(space, m, SeedSpec{master_seed, t});
        const Spectrum spec = dft_of_set(E);
        const PhiResult ph = phi_of_spectrum(spec, E.cardinality());
        const cplx probe = spec.coeffs[probe_xi];
        records[t] = TrialRecord{t,
                                 E.cardinality(),
                                 ph.phi,
                                 threshold,
                                 ph.phi >= threshold,
                                 std::abs(probe.real()),
                                 std::abs(probe.imag())};
    });
    const double secs = timer.seconds();
    return TailExperimentResult{summarize(records, bound, master_seed, secs), std::move(records)};
}

struct RealImagTailResult {
    ExperimentSummary real_summary;
    ExperimentSummary imag_summary;
    double alpha = 0.0;
    bool lambda_valid = false;
    std::vector<TrialRecord> records;
};

// Per-frequency tails of Re and Im of E^(xi) against alpha from the proof's
// substitution; each tail is bounded by 2*n^{-(1+eps)}.
inline RealImagTailResult real_imag_tail_experiment(const SpaceParams& space, double delta,
                                                    double epsilon, std::uint64_t trials,
                                                    std::uint64_t probe_xi,
                                                    std::uint64_t master_seed, unsigned jobs = 0) {
    if (trials < 1) throw input_error("trials must be >= 1");
    if (probe_xi == 0 || probe_xi >= space.n) throw input_error("probe frequency must be nonzero");
    const TheoremParams tp = TheoremParams::create(space.n, delta, epsilon);
    const double bound = 2.0 * std::pow(static_cast<double>(space.n), -(1.0 + epsilon));
    detail::Timer timer;
    std::vector<TrialRecord> records(trials);
    detail::parallel_trials(trials, jobs, [&](std::uint64_t t) {
        const PointSet E = sample_bernoulli(space, delta, SeedSpec{master_seed, t});
        const cplx probe = dft_single(E, probe_xi);
        const double mag = std::abs(probe);
        const double combined = std::numbers::sqrt2 * tp.alpha;
        records[t] = TrialRecord{t,
                                 E.cardinality(),
                                 mag,
                                 combined,
                                 mag >= combined,
                                 std::abs(probe.real()),
                                 std::abs(probe.imag())};
    });
    const double secs = timer.seconds();

    std::vector<TrialRecord> re = records, im = records;
    for (TrialRecord& r : re) {
        r.statistic = r.real_part_abs;
        r.threshold = tp.alpha;
        r.exceeded = r.real_part_abs >= tp.alpha;
    }
    for (TrialRecord& r : im) {
        r.statistic = r.imag_part_abs;
        r.threshold = tp.alpha;
        r.exceeded = r.imag_part_abs >= tp.alpha;
    }
    return RealImagTailResult{summarize(re, bound, master_seed, secs),
                              summarize(im, bound, master_seed, secs), tp.alpha, tp.lambda_valid,
                              std::move(records)};
}

struct ExpectationReport {
    std::uint64_t trials = 0;
    cplx mean_coeff{0.0, 0.0};
    double mean_coeff_tolerance = 0.0;  // 3*sqrt(n*delta/trials)
    double mean_sq = 0.0;
    double expected_sq = 0.0;  // n*delta*(1-delta)
    double sq_stderr3 = 0.0;   // 3 empirical standard errors
    bool mean_ok = false;
    bool sq_ok = false;
    bool pass = false;
    double wall_time_s = 0.0;
    std::uint64_t master_seed = 0;
};

// Monte Carlo check of E[E^(xi)] = 0 and E[|E^(xi)|^2] = n*delta*(1-delta)
// for the percolation model at a nonzero probe frequency.
inline ExpectationReport expectation_identity_experiment(const SpaceParams& space, double delta,
                                                         std::uint64_t trials,
                                                         std::uint64_t probe_xi,
                                                         std::uint64_t master_seed,
                                                         unsigned jobs = 0) {
    if (trials < 1) throw input_error("trials must be >= 1");
    if (probe_xi == 0 || probe_xi >= space.n) throw input_error("probe frequency must be nonzero");
    detail::Timer timer;
    std::vector<cplx> coeffs(trials);
    detail::parallel_trials(trials, jobs, [&](std::uint64_t t) {
        const PointSet E = sample_bernoulli(space, delta, SeedSpec{master_seed, t});
        coeffs[t] = dft_single(E, probe_xi);
    });
    ExpectationReport rep;
    rep.trials = trials;
    rep.master_seed = master_seed;
    cplx sum{0.0, 0.0};
    double sum_sq = 0.0, sum_sq2 = 0.0;
    for (const cplx& c : coeffs) {
        sum += c;
        const double sq = std::norm(c);
        sum_sq += sq;
        sum_sq2 += sq * sq;
    }
    const double tn = static_cast<double>(trials);
    rep.mean_coeff = sum / tn;
    rep.mean_sq = sum_sq / tn;
    rep.expected_sq = static_cast<double>(space.n) * delta * (1.0 - delta);
    rep.mean_coeff_tolerance = 3.0 * std::sqrt(static_cast<double>(space.n) * delta / tn);
    const double var_sq = std::max(0.0, sum_sq2 / tn - rep.mean_sq * rep.mean_sq);
    rep.sq_stderr3 = 3.0 * std::sqrt(var_sq / tn);
    rep.mean_ok = std::abs(rep.mean_coeff) <= rep.mean_coeff_tolerance;
    rep.sq_ok = std::abs(rep.mean_sq - rep.expected_sq) <= rep.sq_stderr3;
    rep.pass = rep.mean_ok && rep.sq_ok;
    rep.wall_time_s = timer.seconds();
    return rep;
}

// Empirical frequency of |#E - n*delta| >= n*delta/2 against the Chebyshev
// bound 4(1-delta)/(n*delta). The record statistic is the size deviation.
inline TailExperimentResult size_concentration_experiment(const SpaceParams& space, double delta,
                                                          std::uint64_t trials,
                                                          std::uint64_t master_seed,
                                                          unsigned jobs = 0) {
    if (trials < 1) throw input_error("trials must be >= 1");
    const double mean = static_cast<double>(space.n) * delta;
    const double threshold = mean / 2.0;
    const double bound = chebyshev_size_bound(space.n, delta);
    detail::Timer timer;
    std::vector<TrialRecord> records(trials);
    detail::parallel_trials(trials, jobs, [&](std::uint64_t t) {
        const PointSet E = sample_bernoulli(space, delta, SeedSpec{master_seed, t});
        const double dev = std::abs(static_cast<double>(E.cardinality()) - mean);
        records[t] = TrialRecord{t, E.cardinality(), dev, threshold, dev >= threshold, 0.0, 0.0};
    });
    const double secs = timer.seconds();
    return TailExperimentResult{summarize(records, bound, master_seed, secs), std::move(records)};
}

// Families of independent bounded summands for the deviation-bound oracle.
struct VariableSpec {
    enum class Family { rademacher, centered_bernoulli, cosine_weighted };
    Family family = Family::rademacher;
    std::uint64_t N = 1;  // rademacher / centered_bernoulli
    double q = 0.5;       // centered_bernoulli success probability
    // cosine_weighted: the Theorem-proof summands E(x)cos(2*pi*x.xi/p), N = n
    SpaceParams space{};
    double delta = 0.0;
    std::uint64_t xi = 0;
};

struct LemmaOracleReport {
    std::uint64_t trials = 0;
    std::uint64_t exceed_count = 0;
    double empirical_prob = 0.0;
    DeviationParams params{};
    double bound = 0.0;
    double slack = 0.0;
    bool pass = false;
    double wall_time_s = 0.0;
    std::uint64_t master_seed = 0;
};

// Empirically checks P(|sum X_j| >= alpha) <= deviation_bound for a family
// with known mu1, mu2 and |X_j| <= 1.
inline LemmaOracleReport lemma_oracle_experiment(const VariableSpec& spec, double alpha,
                                                 double lambda, std::uint64_t trials,
                                                 std::uint64_t master_seed, unsigned jobs = 0) {
    if (trials < 1) throw input_error("trials must be >= 1");
    DeviationParams params;
    params.alpha = alpha;
    params.lambda = lambda;
    std::vector<double> weights;  // cosine family only
    switch (spec.family) {
        case VariableSpec::Family::rademacher:
            if (spec.N < 1) throw input_error("N must be >= 1");
            params.N = spec.N;
            params.mu1 = 0.0;
            params.mu2 = static_cast<double>(spec.N);
            break;
        case VariableSpec::Family::centered_bernoulli: {
            if (spec.N < 1) throw input_error("N must be >= 1");
            if (!(spec.q > 0.0 && spec.q < 1.0)) throw input_error("q must lie in (0,1)");
            params.N = spec.N;
            params.mu1 = 0.0;
            const double scale = 1.0 / std::max(spec.q, 1.0 - spec.q);
            params.mu2 = static_cast<double>(spec.N) * spec.q * (1.0 - spec.q) * scale * scale;
            break;
        }
        case VariableSpec::Family::cosine_weighted: {
            if (spec.xi == 0 || spec.xi >= spec.space.n)
                throw input_error("cosine family: xi must be nonzero");
            if (!(spec.delta > 0.0 && spec.delta < 1.0))
                throw input_error("cosine family: delta must lie in (0,1)");
            weights.resize(spec.space.n);
            double sum_w = 0.0, sum_w2 = 0.0;
            for (std::uint64_t x = 0; x < spec.space.n; ++x) {
                weights[x] = std::cos(2.0 * std::numbers::pi *
                                      dot_indices(spec.space, x, spec.xi) / spec.space.p);
                sum_w += weights[x];
                sum_w2 += weights[x] * weights[x];
            }
            params.N = spec.space.n;
            params.mu1 = spec.delta * sum_w;    // = 0 up to round-off
            params.mu2 = spec.delta * sum_w2;   // = n*delta/2 for p odd
            break;
        }
    }
    const double bound = deviation_bound(params);

    detail::Timer timer;
    std::vector<std::uint8_t> exceeded(trials, 0);
    detail::parallel_trials(trials, jobs, [&](std::uint64_t t) {
        SplitStream stream(SeedSpec{master_seed, t});
        double sum = 0.0;
        switch (spec.family) {
            case VariableSpec::Family::rademacher:
                for (std::uint64_t j = 0; j < spec.N; ++j)
                    sum += (stream.next_u64() >> 63) ? 1.0 : -1.0;
                break;
            case VariableSpec::Family::centered_bernoulli: {
                const double scale = 1.0 / std::max(spec.q, 1.0 - spec.q);
                for (std::uint64_t j = 0; j < spec.N; ++j)
                    sum += ((stream.next_unit() < spec.q ? 1.0 : 0.0) - spec.q) * scale;
                break;
            }
            case VariableSpec::Family::cosine_weighted:
                for (std::uint64_t x = 0; x < spec.space.n; ++x)
                    if (stream.next_unit() < spec.delta) sum += weights[x];
                break;
        }
        exceeded[t] = std::abs(sum) >= alpha ? 1 : 0;
    });

    LemmaOracleReport rep;
    rep.trials = trials;
    for (std::uint8_t e : exceeded) rep.exceed_count += e;
    rep.empirical_prob = static_cast<double>(rep.exceed_count) / static_cast<double>(trials);
    rep.params = params;
    rep.bound = bound;
    rep.slack = bound_slack(bound, trials);
    rep.pass = bound >= 1.0 || rep.empirical_prob <= bound + rep.slack;
    rep.wall_time_s = timer.seconds();
    rep.master_seed = master_seed;
    return rep;
}

enum class ExploreMode { exhaustive, local };

struct SearchResult {
    PointSet best_set;
    double best_ratio = 0.0;
    ExploreMode mode = ExploreMode::exhaustive;
    std::uint64_t evaluations = 0;
};

namespace detail {

// min(C(n,m), cap+1) without overflow.
inline std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t m, std::uint64_t cap) {
    if (m > n) return 0;
    m = std::min(m, n - m);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        // exact at each step: result holds C(n-m+i, i)
        const unsigned __int128 r = static_cast<unsigned __int128>(result) * (n - m + i) / i;
        if (r > cap) return cap + 1;
        result = static_cast<std::uint64_t>(r);
    }
    return result;
}

}  // namespace detail

// Ratios within this of each other count as tied; ties keep the earlier
// subset in enumeration order. Analytic ties (translates, dilates) land well
// inside this window, distinct ratios well outside it.
inline constexpr double kExploreTieEps = 1e-12;

// Minimizes Phi(E)/sqrt(#E) over m-subsets. Exhaustive mode enumerates all
// subsets in ascending lexicographic order of sorted index tuples (ties keep
// the earliest, i.e. lexicographically smallest, subset). Local mode runs
// steepest-descent single-point swaps from seeded random starts, restarting
// with successive stream_ids until the evaluation budget is spent.
inline SearchResult conjecture_explore(const SpaceParams& space, std::uint64_t m, ExploreMode mode,
                                       std::uint64_t budget = 10'000'000,
                                       std::uint64_t master_seed = 0) {
    if (m < 1 || m > space.n) throw input_error("m must lie in [1, n]");
    if (budget < 1) throw input_error("budget must be >= 1");

    if (mode == ExploreMode::exhaustive) {
        const std::uint64_t count = detail::binomial_capped(space.n, m, budget);
        if (count > budget)
            throw resource_error("exhaustive search: C(" + std::to_string(space.n) + "," +
                                 std::to_string(m) + ") > " + std::to_string(budget) +
                                 " subsets exceeds the budget");
        std::vector<std::uint64_t> comb(m);
        for (std::uint64_t i = 0; i < m; ++i) comb[i] = i;
        PointSet best(space);
        double best_ratio = std::numeric_limits<double>::infinity();
        std::uint64_t evals = 0;
        while (true) {
            PointSet cand(space);
            for (std::uint64_t i : comb) cand.set(i, true);
            const double ratio = salem_ratio(cand);
            ++evals;
            if (ratio < best_ratio - kExploreTieEps) {
                best_ratio = ratio;
                best = cand;
            }
            // next combination in lexicographic order
            std::uint64_t k = m;
            while (k > 0 && comb[k - 1] == space.n - m + k - 1) --k;
            if (k == 0) break;
            ++comb[k - 1];
            for (std::uint64_t i = k; i < m; ++i) comb[i] = comb[i - 1] + 1;
        }
        return SearchResult{std::move(best), best_ratio, mode, evals};
    }

    // local search
    PointSet best(space);
    double best_ratio = std::numeric_limits<double>::infinity();
    std::uint64_t evals = 0;
    for (std::uint64_t restart = 0; evals < budget; ++restart) {
        PointSet cur = sample_uniform_m(space, m, SeedSpec{master_seed, restart});
        double cur_ratio = salem_ratio(cur);
        ++evals;
        if (cur_ratio < best_ratio) {
            best_ratio = cur_ratio;
            best = cur;
        }
        bool improved = true;
        while (improved && evals < budget) {
            improved = false;
            std::uint64_t best_out = 0, best_in = 0;
            double best_cand = cur_ratio;
            for (std::uint64_t out = 0; out < space.n && evals < budget; ++out) {
                if (!cur.membership()[out]) continue;
                for (std::uint64_t in = 0; in < space.n && evals < budget; ++in) {
                    if (cur.membership()[in]) continue;
                    cur.set(out, false);
                    cur.set(in, true);
                    const double ratio = salem_ratio(cur);
                    ++evals;
                    cur.set(in, false);
                    cur.set(out, true);
                    if (ratio < best_cand - 1e-12) {
                        best_cand = ratio;
                        best_out = out;
                        best_in = in;
                        improved = true;
                    }
                }
            }
            if (improved) {
                cur.set(best_out, false);
                cur.set(best_in, true);
                cur_ratio = best_cand;
                if (cur_ratio < best_ratio) {
                    best_ratio = cur_ratio;
                    best = cur;
                }
            }
        }
    }
    return SearchResult{std::move(best), best_ratio, mode, evals};
}

}  // namespace ffsalem
