#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclic_rips/circle.hpp"
#include "cyclic_rips/cyclic_graph.hpp"
#include "cyclic_rips/rational.hpp"

namespace cyclic_rips {

/// The level l with l/(2l+1) < r < (l+1)/(2l+3); throws
/// std::invalid_argument("l undefined") when r sits exactly on a critical
/// value, and on r outside (0, 1/2).
int infer_level(const Rational& r);

struct EvolutionStep {
    int n = 0;
    Rational wf;
    int core_n = 1;
    int core_k = 0;
    int intrinsic_dim = 0;
    int betti_dim = 0;
    std::uint64_t betti_rank = 0;

    friend bool operator==(const EvolutionStep&, const EvolutionStep&) = default;
};

struct EvolutionConfig {
    Rational r;
    bool strict = false;
    int max_n = 1000;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0; ///< trial index; distinct streams are independent
    /// Track C(eps): first n at which X_n is an (eps/2)-covering.
    std::vector<Rational> coverage_eps;
    /// Track R_{2l+1}(eps): first n at which X_n has an (eps, 2l+1)-regular subset.
    std::vector<Rational> regular_eps;
    bool record_series = true;
};

struct EvolutionRecord {
    int l = 0;
    Rational delta;
    std::vector<EvolutionStep> steps;
    std::optional<int> m_time; ///< first n with wf >= l/(2l+1)
    std::optional<int> n_time; ///< first n with wf >  l/(2l+1)
    std::vector<std::pair<Rational, std::optional<int>>> coverage_times;
    std::vector<std::pair<Rational, std::optional<int>>> regular_times;

    friend bool operator==(const EvolutionRecord&, const EvolutionRecord&) = default;
};

/// Incremental uniform sampling with the winding fraction recomputed by a
/// full dismantling after every insertion. Deterministic per (seed, stream).
EvolutionRecord run_evolution(const EvolutionConfig& config);

struct WaitingTimes {
    std::optional<int> m_time;
    std::optional<int> n_time;
};

/// Waiting times only, through the rotation-number engine instead of
/// dismantling. Exact and much faster; dual-routed against run_evolution in
/// the tests.
WaitingTimes waiting_times_fast(const Rational& r, bool strict, int max_n, std::uint64_t seed,
                                std::uint64_t stream);

struct ThresholdOptions {
    int max_n = 1000;
    bool fast_engine = true; ///< waiting times via the rotation-number route
    unsigned threads = 0;    ///< 0 = hardware concurrency
};

struct ThresholdSummary {
    Rational r;
    Rational delta;
    int l = 0;
    bool strict = false;
    int trials = 0;
    int max_n = 0;
    /// Per-trial waiting times, right-censored at max_n when never reached.
    std::vector<int> m_samples;
    std::vector<int> n_samples;
    int m_unreached = 0;
    int n_unreached = 0;

    Rational mean_m_exact;
    Rational mean_n_exact;
    double mean_m = 0, mean_n = 0;
    double var_m = 0, var_n = 0;
    double quantiles_m[3] = {0, 0, 0}; ///< 25%, 50%, 75%
    double quantiles_n[3] = {0, 0, 0};
    /// Scaling diagnostics: mean_m / delta^{-2l/(2l+1)} and
    /// mean_n / (delta^{-1} log delta^{-1}).
    double m_ratio = 0, n_ratio = 0;
};

ThresholdSummary estimate_thresholds(const Rational& r, bool strict, int trials,
                                     std::uint64_t seed, const ThresholdOptions& options);

struct BinsTrial {
    int a_time = 0; ///< first bin holding m balls
    int c_time = 0; ///< first bin holding all m colors
    int b_time = 0; ///< colored repetition scheme, total balls thrown
};

/// Balls-into-bins waiting times, the three experiments coupled on one
/// shared throw sequence per trial so the path-wise order A <= C <= B can
/// be asserted. Violations throw invariant_violation.
struct BinsExperimentResult {
    int m = 0;
    int bins = 0;
    std::vector<BinsTrial> trials;
    double mean_a = 0, mean_b = 0, mean_c = 0;
    /// Good-outcome frequency over independent single experiments
    /// (expected m!/m^m), when repetitions were requested.
    std::uint64_t good_outcomes = 0;
    std::uint64_t outcome_repetitions = 0;
};

BinsExperimentResult run_bins(int m, int bins, int trials, std::uint64_t seed,
                              std::uint64_t outcome_repetitions = 0);

struct RegularCouplingTrial {
    int r_time = 0; ///< first (1/(bins*m), m)-regular subset on the circle
    int c_time = 0; ///< first bin with all m colors
};

/// Couples the circle process with the bins process: each step draws a
/// uniform y in [0, 1/m) and a color i, places the circle point y + i/m,
/// and files a ball of color i into the bin of y. Path-wise
/// r_time <= c_time on every trial; violations throw invariant_violation.
struct RegularCouplingReport {
    int m = 0;
    int bins = 0;
    std::vector<RegularCouplingTrial> trials;
    double mean_r = 0, mean_c = 0;
};

RegularCouplingReport run_regular_coupling(int m, int bins, int trials, std::uint64_t seed);

} // namespace cyclic_rips
