#include "cyclic_rips/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "cyclic_rips/classify.hpp"
#include "cyclic_rips/errors.hpp"

namespace cyclic_rips {

int infer_level(const Rational& r) {
    if (r <= 0 || 2 * r >= 1) throw std::invalid_argument("scale must satisfy 0 < r < 1/2");
    Rational rho = r / (1 - 2 * r);
    Int fl = floor_rat(rho);
    if (Rational(fl) == rho) throw std::invalid_argument("l undefined");
    return static_cast<int>(fl);
}

EvolutionRecord run_evolution(const EvolutionConfig& config) {
    const int l = infer_level(config.r);
    const Rational singular(l, 2 * l + 1);
    const int m_gon = 2 * l + 1;

    EvolutionRecord record;
    record.l = l;
    record.delta = config.r - singular;
    for (const auto& eps : config.coverage_eps) record.coverage_times.emplace_back(eps, std::nullopt);
    for (const auto& eps : config.regular_eps) record.regular_times.emplace_back(eps, std::nullopt);

    Rng rng(config.seed, config.stream);
    std::vector<CirclePoint> points;
    points.reserve(static_cast<std::size_t>(config.max_n));
    const Int denom = Int(1) << 64;
    Rational previous_wf(-1);

    for (int n = 1; n <= config.max_n; ++n) {
        while (true) {
            CirclePoint p(Rational(Int(rng.next_u64()), denom));
            auto it = std::lower_bound(points.begin(), points.end(), p);
            if (it != points.end() && *it == p) continue; // rejected duplicate draw
            points.insert(it, p);
            break;
        }
        auto config_now = PointConfiguration::from_sorted(points);
        auto graph = make_vr_digraph(config_now, config.r, config.strict);
        auto wf = winding_fraction(graph);

        if (previous_wf > wf.value) {
            throw invariant_violation("winding fraction decreased along the sample path");
        }
        if (config.strict ? wf.value >= config.r : wf.value > config.r) {
            throw invariant_violation("winding fraction exceeded the scale bound");
        }
        previous_wf = wf.value;

        if (!record.m_time && wf.value >= singular) record.m_time = n;
        if (!record.n_time && wf.value > singular) record.n_time = n;
        for (auto& [eps, hit] : record.coverage_times) {
            if (!hit && is_epsilon_covering(config_now, eps / 2)) hit = n;
        }
        for (auto& [eps, hit] : record.regular_times) {
            if (!hit && has_regular_subset(config_now, eps, m_gon)) hit = n;
        }

        if (config.record_series) {
            EvolutionStep step;
            step.n = n;
            step.wf = wf.value;
            step.core_n = wf.core_n;
            step.core_k = wf.core_k;
            step.intrinsic_dim = intrinsic_dimension(wf.value);
            auto type = classify_core(wf.core_n, wf.core_k);
            switch (type.kind) {
                case HomotopyType::Kind::Point:
                    step.betti_dim = 0;
                    step.betti_rank = 0;
                    break;
                case HomotopyType::Kind::OddSphere:
                    step.betti_dim = 2 * type.l + 1;
                    step.betti_rank = 1;
                    break;
                case HomotopyType::Kind::EvenWedge:
                    step.betti_dim = 2 * type.l;
                    step.betti_rank = type.count;
                    break;
            }
            record.steps.push_back(std::move(step));
        }
    }
    return record;
}

namespace {

// Fast engine: points as 64-bit dyadic numerators, clockwise distances
// compared with the scale through 128-bit cross multiplication. Exact for
// every rational scale with numerator and denominator below 2^62.
struct FastPath {
    __uint128_t num;
    __uint128_t den;
    bool strict;
    std::vector<std::uint64_t> points;

    bool within(std::uint64_t from, std::uint64_t to) const {
        const std::uint64_t gap = to - from; // wraps mod 2^64 by design
        const __uint128_t lhs = static_cast<__uint128_t>(gap) * den;
        const __uint128_t rhs = num << 64;
        return strict ? lhs < rhs : lhs <= rhs;
    }

    // Winding fraction as (winding, period) of the greedy jump orbit;
    // (0, 1) when some point has no out-edge.
    std::pair<long long, long long> rotation() const {
        const int n = static_cast<int>(points.size());
        if (n < 2) return {0, 1};
        std::vector<int> reach(static_cast<std::size_t>(n));
        int e = 0;
        for (int i = 0; i < n; ++i) {
            if (e < i) e = i;
            while (e - i < n - 1 &&
                   within(points[static_cast<std::size_t>(i)],
                          points[static_cast<std::size_t>((e + 1) % n)])) {
                ++e;
            }
            reach[static_cast<std::size_t>(i)] = e - i;
            if (e == i) return {0, 1}; // no out-edge, hence no directed cycle
        }
        std::vector<long long> seen_step(static_cast<std::size_t>(n), -1);
        std::vector<long long> seen_lift(static_cast<std::size_t>(n), 0);
        int v = 0;
        long long lift = 0, step = 0;
        while (seen_step[static_cast<std::size_t>(v)] < 0) {
            seen_step[static_cast<std::size_t>(v)] = step;
            seen_lift[static_cast<std::size_t>(v)] = lift;
            lift += reach[static_cast<std::size_t>(v)];
            v = (v + reach[static_cast<std::size_t>(v)]) % n;
            ++step;
        }
        long long period = step - seen_step[static_cast<std::size_t>(v)];
        long long winding = (lift - seen_lift[static_cast<std::size_t>(v)]) / n;
        if ((lift - seen_lift[static_cast<std::size_t>(v)]) % n != 0) {
            throw invariant_violation("greedy orbit does not close up to full revolutions");
        }
        return {winding, period};
    }
};

} // namespace

WaitingTimes waiting_times_fast(const Rational& r, bool strict, int max_n, std::uint64_t seed,
                                std::uint64_t stream) {
    const int l = infer_level(r);
    const Int num = numerator(r), den = denominator(r);
    if (num >= (Int(1) << 62) || den >= (Int(1) << 62)) {
        throw std::invalid_argument("scale too fine for the fast engine");
    }
    FastPath fast;
    fast.num = static_cast<std::uint64_t>(num);
    fast.den = static_cast<std::uint64_t>(den);
    fast.strict = strict;

    Rng rng(seed, stream);
    WaitingTimes times;
    for (int n = 1; n <= max_n; ++n) {
        while (true) {
            std::uint64_t u = rng.next_u64();
            auto it = std::lower_bound(fast.points.begin(), fast.points.end(), u);
            if (it != fast.points.end() && *it == u) continue;
            fast.points.insert(it, u);
            break;
        }
        auto [winding, period] = fast.rotation();
        // compare winding/period with l/(2l+1)
        const long long lhs = winding * (2 * l + 1);
        const long long rhs = static_cast<long long>(l) * period;
        if (!times.m_time && lhs >= rhs) times.m_time = n;
        if (lhs > rhs) {
            times.n_time = n;
            return times; // wf only grows from here
        }
    }
    return times;
}

namespace {

WaitingTimes waiting_times_slow(const Rational& r, bool strict, int max_n, std::uint64_t seed,
                                std::uint64_t stream) {
    EvolutionConfig config;
    config.r = r;
    config.strict = strict;
    config.max_n = max_n;
    config.seed = seed;
    config.stream = stream;
    config.record_series = false;
    auto record = run_evolution(config);
    return {record.m_time, record.n_time};
}

double quantile(std::vector<int> sorted, double q) {
    if (sorted.empty()) return 0;
    double idx = q * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(idx);
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    double frac = idx - static_cast<double>(lo);
    return static_cast<double>(sorted[lo]) * (1 - frac) + static_cast<double>(sorted[hi]) * frac;
}

} // namespace

ThresholdSummary estimate_thresholds(const Rational& r, bool strict, int trials,
                                     std::uint64_t seed, const ThresholdOptions& options) {
    if (trials < 1) throw std::invalid_argument("need >= 1 trial");
    ThresholdSummary summary;
    summary.r = r;
    summary.l = infer_level(r);
    summary.delta = r - Rational(summary.l, 2 * summary.l + 1);
    summary.strict = strict;
    summary.trials = trials;
    summary.max_n = options.max_n;

    unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<unsigned>(workers, static_cast<unsigned>(trials));

    std::vector<WaitingTimes> results(static_cast<std::size_t>(trials));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (int t = static_cast<int>(w); t < trials; t += static_cast<int>(workers)) {
                results[static_cast<std::size_t>(t)] =
                    options.fast_engine
                        ? waiting_times_fast(r, strict, options.max_n, seed,
                                             static_cast<std::uint64_t>(t))
                        : waiting_times_slow(r, strict, options.max_n, seed,
                                             static_cast<std::uint64_t>(t));
            }
        }));
    }
    for (auto& f : futures) f.get();

    Int m_total = 0, n_total = 0;
    for (int t = 0; t < trials; ++t) {
        const auto& wt = results[static_cast<std::size_t>(t)];
        int m_value = wt.m_time.value_or(options.max_n);
        int n_value = wt.n_time.value_or(options.max_n);
        if (!wt.m_time) ++summary.m_unreached;
        if (!wt.n_time) ++summary.n_unreached;
        summary.m_samples.push_back(m_value);
        summary.n_samples.push_back(n_value);
        m_total += m_value;
        n_total += n_value;
    }
    summary.mean_m_exact = Rational(m_total, trials);
    summary.mean_n_exact = Rational(n_total, trials);
    summary.mean_m = static_cast<double>(summary.mean_m_exact);
    summary.mean_n = static_cast<double>(summary.mean_n_exact);

    auto variance = [&](const std::vector<int>& samples, double mean) {
        if (samples.size() < 2) return 0.0;
        double sum = 0;
        for (int v : samples) sum += (v - mean) * (v - mean);
        return sum / static_cast<double>(samples.size() - 1);
    };
    summary.var_m = variance(summary.m_samples, summary.mean_m);
    summary.var_n = variance(summary.n_samples, summary.mean_n);

    auto sorted_m = summary.m_samples;
    auto sorted_n = summary.n_samples;
    std::sort(sorted_m.begin(), sorted_m.end());
    std::sort(sorted_n.begin(), sorted_n.end());
    const double qs[3] = {0.25, 0.5, 0.75};
    for (int i = 0; i < 3; ++i) {
        summary.quantiles_m[i] = quantile(sorted_m, qs[i]);
        summary.quantiles_n[i] = quantile(sorted_n, qs[i]);
    }

    const double delta = static_cast<double>(summary.delta);
    const double l = summary.l;
    summary.m_ratio = summary.mean_m / std::pow(1.0 / delta, 2 * l / (2 * l + 1));
    summary.n_ratio = summary.mean_n / ((1.0 / delta) * std::log(1.0 / delta));
    return summary;
}

BinsExperimentResult run_bins(int m, int bins, int trials, std::uint64_t seed,
                              std::uint64_t outcome_repetitions) {
    if (m < 1 || bins < 1) throw std::invalid_argument("need m >= 1 and bins >= 1");
    if (trials < 0) throw std::invalid_argument("trials must be nonnegative");
    BinsExperimentResult result;
    result.m = m;
    result.bins = bins;
    result.outcome_repetitions = outcome_repetitions;

    const std::uint32_t full = m >= 32 ? ~0u : (1u << m) - 1;
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        BinsTrial trial;
        std::vector<int> counts(static_cast<std::size_t>(bins), 0);
        std::vector<std::uint32_t> colors(static_cast<std::size_t>(bins), 0);
        // repetition state for the B experiment, reset after each bad outcome
        std::vector<int> rep_counts(static_cast<std::size_t>(bins), 0);
        std::vector<std::vector<std::uint8_t>> rep_colors(static_cast<std::size_t>(bins));
        int thrown = 0;
        while (trial.b_time == 0) {
            int bin = static_cast<int>(rng.below(static_cast<std::uint64_t>(bins)));
            int color = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            ++thrown;

            if (trial.a_time == 0 && ++counts[static_cast<std::size_t>(bin)] == m) {
                trial.a_time = thrown;
            } else if (trial.a_time != 0) {
                ++counts[static_cast<std::size_t>(bin)];
            }
            colors[static_cast<std::size_t>(bin)] |= 1u << color;
            if (trial.c_time == 0 && colors[static_cast<std::size_t>(bin)] == full) {
                trial.c_time = thrown;
            }

            auto& rep_bin = rep_colors[static_cast<std::size_t>(bin)];
            rep_bin.push_back(static_cast<std::uint8_t>(color));
            if (++rep_counts[static_cast<std::size_t>(bin)] == m) {
                std::uint32_t seen = 0;
                bool good = true;
                for (std::uint8_t c : rep_bin) {
                    if (seen & (1u << c)) {
                        good = false;
                        break;
                    }
                    seen |= 1u << c;
                }
                if (good) {
                    trial.b_time = thrown;
                } else {
                    std::fill(rep_counts.begin(), rep_counts.end(), 0);
                    for (auto& list : rep_colors) list.clear();
                }
            }
        }
        if (!(trial.a_time <= trial.c_time && trial.c_time <= trial.b_time)) {
            throw invariant_violation("bins waiting times broke the path-wise order");
        }
        result.trials.push_back(trial);
        result.mean_a += trial.a_time;
        result.mean_b += trial.b_time;
        result.mean_c += trial.c_time;
    }
    if (trials > 0) {
        result.mean_a /= trials;
        result.mean_b /= trials;
        result.mean_c /= trials;
    }

    for (std::uint64_t rep = 0; rep < outcome_repetitions; ++rep) {
        Rng rng(seed, (1ull << 32) + rep);
        std::vector<int> counts(static_cast<std::size_t>(bins), 0);
        std::vector<std::vector<std::uint8_t>> thrown_colors(static_cast<std::size_t>(bins));
        while (true) {
            int bin = static_cast<int>(rng.below(static_cast<std::uint64_t>(bins)));
            int color = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            thrown_colors[static_cast<std::size_t>(bin)].push_back(static_cast<std::uint8_t>(color));
            if (++counts[static_cast<std::size_t>(bin)] == m) {
                std::uint32_t seen = 0;
                bool good = true;
                for (std::uint8_t c : thrown_colors[static_cast<std::size_t>(bin)]) {
                    if (seen & (1u << c)) {
                        good = false;
                        break;
                    }
                    seen |= 1u << c;
                }
                if (good) ++result.good_outcomes;
                break;
            }
        }
    }
    return result;
}

RegularCouplingReport run_regular_coupling(int m, int bins, int trials, std::uint64_t seed) {
    if (m < 1 || bins < 1) throw std::invalid_argument("need m >= 1 and bins >= 1");
    RegularCouplingReport report;
    report.m = m;
    report.bins = bins;

    const Rational eps(1, static_cast<long long>(bins) * m);
    const std::uint32_t full = m >= 32 ? ~0u : (1u << m) - 1;
    const Int denom = (Int(1) << 64) * m;

    for (int t = 0; t < trials; ++t) {
        Rng rng(seed, static_cast<std::uint64_t>(t));
        RegularCouplingTrial trial;
        std::vector<std::uint32_t> colors(static_cast<std::size_t>(bins), 0);
        std::vector<CirclePoint> points;
        int step = 0;
        while (trial.c_time == 0 || trial.r_time == 0) {
            ++step;
            std::uint64_t u = rng.next_u64();
            int color = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
            // y = u / (2^64 m) is uniform in [0, 1/m); the point is y + color/m
            int bin = static_cast<int>((static_cast<__uint128_t>(u) * static_cast<unsigned>(bins)) >> 64);
            CirclePoint point(Rational(Int(u), denom) + Rational(color, m));

            auto it = std::lower_bound(points.begin(), points.end(), point);
            if (it == points.end() || !(*it == point)) points.insert(it, point);

            colors[static_cast<std::size_t>(bin)] |= 1u << color;
            if (trial.c_time == 0 && colors[static_cast<std::size_t>(bin)] == full) {
                trial.c_time = step;
            }
            if (trial.r_time == 0 &&
                has_regular_subset(PointConfiguration::from_sorted(points), eps, m)) {
                trial.r_time = step;
            }
        }
        if (trial.r_time > trial.c_time) {
            throw invariant_violation("coupled regular-subset time exceeded the bins time");
        }
        report.trials.push_back(trial);
        report.mean_r += trial.r_time;
        report.mean_c += trial.c_time;
    }
    if (trials > 0) {
        report.mean_r /= trials;
        report.mean_c /= trials;
    }
    return report;
}

} // namespace cyclic_rips
