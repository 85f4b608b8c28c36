#pragma once

// Test-side oracles: brute-force and enumeration routes kept deliberately
// independent of the library's own computation paths.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cyclic_rips/circle.hpp"
#include "cyclic_rips/cyclic_graph.hpp"
#include "cyclic_rips/rng.hpp"

namespace oracles {

using cyclic_rips::CirclePoint;
using cyclic_rips::CyclicGraph;
using cyclic_rips::PointConfiguration;
using cyclic_rips::Rational;
using cyclic_rips::Rng;

// ---------------------------------------------------------------------------
// Exhaustive cyclic homomorphism search.
//
// A non-constant cyclic monotone map lifts to a non-decreasing integer
// sequence p_0 <= ... <= p_{n-1} <= p_0 + m with per-step increments at most
// m-1 and wrap increment p_0 + m - p_{n-1} in [0, m-1] (the image winds
// around the target exactly once; p_{n-1} = p_0 + m encodes a fiber that
// wraps through index 0). Out-neighborhoods are intervals, so the digraph
// condition reduces to checking the farthest out-edge of every source
// vertex. Constant maps are valid exactly when the source has no directed
// cycle.
// ---------------------------------------------------------------------------

inline bool exists_cyclic_homomorphism(const CyclicGraph& g, const CyclicGraph& h) {
    if (!g.has_directed_cycle()) return true; // any constant map works
    const int n = g.n();
    const int m = h.n();
    if (!h.has_directed_cycle() && m >= 2) {
        // the image of a directed cycle is a directed cycle
        return false;
    }
    std::vector<long long> lifted(static_cast<std::size_t>(n));
    auto feasible_edge = [&](int i) {
        // farthest out-edge of source vertex i, both endpoints placed
        int target = (i + g.reach(i)) % n;
        long long from = lifted[static_cast<std::size_t>(i)];
        long long to = lifted[static_cast<std::size_t>(target)];
        if (target < i) to += m; // wrapped around the source cycle
        long long jump = to - from;
        return jump <= h.reach(static_cast<int>(((from % m) + m) % m));
    };
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == n) {
            if (lifted[static_cast<std::size_t>(n - 1)] < lifted[0] + 1) return false;
            for (int v = 0; v < n; ++v) {
                if (v + g.reach(v) >= n && !feasible_edge(v)) return false;
            }
            return true;
        }
        long long lo = lifted[static_cast<std::size_t>(i - 1)];
        long long hi = std::min(lo + m - 1, lifted[0] + m);
        for (long long p = lo; p <= hi; ++p) {
            lifted[static_cast<std::size_t>(i)] = p;
            bool ok = true;
            for (int v = 0; v < i; ++v) {
                if (v + g.reach(v) == i && !feasible_edge(v)) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, i + 1)) return true;
        }
        return false;
    };
    for (int anchor = 0; anchor < m; ++anchor) {
        lifted[0] = anchor;
        if (dfs(dfs, 1)) return true;
    }
    return false;
}

// Max k/n over all cyclic homomorphisms C_n^k -> G with n <= max_n
// (reduced fractions suffice to determine the maximum value).
inline Rational wf_oracle(const CyclicGraph& g, int max_n) {
    Rational best(0);
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 1; 2 * k < n; ++k) {
            Rational value(k, n);
            if (value <= best) continue;
            if (exists_cyclic_homomorphism(cyclic_rips::make_cnk(n, k), g)) best = value;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Literal re-statements of definitions, for cross-validation.
// ---------------------------------------------------------------------------

inline bool dominated_by_set_comparison(const CyclicGraph& g, int i) {
    const int n = g.n();
    auto in_neighbors = [&](int j) {
        std::set<int> result;
        for (int k = 0; k < n; ++k) {
            if (k != j && g.has_edge(k, j)) result.insert(k);
        }
        return result;
    };
    auto open_successor = in_neighbors((i + 1) % n);
    auto closed = in_neighbors(i);
    closed.insert(i);
    return open_successor == closed;
}

// Direct check of cyclic monotonicity: fibers are cyclic subintervals and
// image betweenness implies source betweenness, quantified over all triples.
inline bool cyclic_monotone_literal(const std::vector<int>& assignment, int m) {
    const int n = static_cast<int>(assignment.size());
    // fibers are subintervals: at most one boundary i in S, i+1 not in S
    std::map<int, std::vector<int>> fibers;
    for (int i = 0; i < n; ++i) fibers[assignment[static_cast<std::size_t>(i)]].push_back(i);
    for (const auto& [value, positions] : fibers) {
        std::set<int> position_set(positions.begin(), positions.end());
        int boundaries = 0;
        for (int i : positions) {
            if (!position_set.count((i + 1) % n)) ++boundaries;
        }
        if (boundaries > 1) return false;
    }
    auto cyclically_ordered = [](int a, int b, int c, int modulus) {
        if (a == b || b == c || a == c) return false;
        auto fwd = [modulus](int x, int y) { return ((y - x) % modulus + modulus) % modulus; };
        return fwd(a, b) + fwd(b, c) + fwd(c, a) == modulus;
    };
    for (int s = 0; s < n; ++s) {
        for (int s2 = 0; s2 < n; ++s2) {
            for (int s3 = 0; s3 < n; ++s3) {
                if (cyclically_ordered(assignment[static_cast<std::size_t>(s)],
                                       assignment[static_cast<std::size_t>(s2)],
                                       assignment[static_cast<std::size_t>(s3)], m) &&
                    !cyclically_ordered(s, s2, s3, n)) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool cyclic_homomorphism_literal(const cyclic_rips::VertexMap& f) {
    const int n = f.source.n();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !f.source.has_edge(i, j)) continue;
            int fi = f.assignment[static_cast<std::size_t>(i)];
            int fj = f.assignment[static_cast<std::size_t>(j)];
            if (fi != fj && !f.target.has_edge(fi, fj)) return false;
        }
    }
    if (!cyclic_monotone_literal(f.assignment, f.target.n())) return false;
    if (f.source.has_directed_cycle()) {
        bool constant = std::all_of(f.assignment.begin(), f.assignment.end(),
                                    [&](int v) { return v == f.assignment[0]; });
        if (constant) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Regular-subset brute force: every m-subset, every pole assignment; the
// phase constraint intervals (c_i - eps, c_i + eps) intersect iff all the
// alignment phases c_i fit inside an open arc of length 2 eps.
// ---------------------------------------------------------------------------

inline bool regular_subset_bruteforce(const PointConfiguration& x, const Rational& eps, int m) {
    const int s = static_cast<int>(x.size());
    if (m > s || eps <= 0) return false;
    std::vector<int> subset;
    std::vector<int> poles(static_cast<std::size_t>(m));
    auto phases_fit = [&]() {
        std::vector<Rational> phases;
        phases.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            phases.push_back(cyclic_rips::mod1(x[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])].value() -
                                               Rational(poles[static_cast<std::size_t>(i)], m)));
        }
        std::sort(phases.begin(), phases.end());
        Rational largest_gap = phases.size() == 1
                                   ? Rational(1)
                                   : Rational(1) - phases.back() + phases.front();
        for (std::size_t i = 0; i + 1 < phases.size(); ++i) {
            largest_gap = std::max(largest_gap, Rational(phases[i + 1] - phases[i]));
        }
        return Rational(1) - largest_gap < 2 * eps;
    };
    auto assign = [&](auto&& self, std::size_t position, unsigned used) -> bool {
        if (position == static_cast<std::size_t>(m)) return phases_fit();
        for (int pole = 0; pole < m; ++pole) {
            if (used & (1u << pole)) continue;
            poles[position] = pole;
            if (self(self, position + 1, used | (1u << pole))) return true;
        }
        return false;
    };
    auto choose = [&](auto&& self, int next) -> bool {
        if (subset.size() == static_cast<std::size_t>(m)) return assign(assign, 0, 0);
        for (int v = next; v < s; ++v) {
            if (static_cast<int>(subset.size()) + (s - v) < m) break;
            subset.push_back(v);
            if (self(self, v + 1)) return true;
            subset.pop_back();
        }
        return false;
    };
    return choose(choose, 0);
}

// ---------------------------------------------------------------------------
// Random inputs.
// ---------------------------------------------------------------------------

inline Rational random_scale(Rng& rng, int max_denominator = 1000) {
    while (true) {
        long long b = 3 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_denominator - 2)));
        long long half = (b - 1) / 2;
        if (half < 1) continue;
        long long a = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(half)));
        return Rational(a, b);
    }
}

inline PointConfiguration random_points(Rng& rng, int count) {
    return cyclic_rips::sample_uniform(rng, static_cast<std::size_t>(count));
}

inline CyclicGraph random_vr_digraph(Rng& rng, int max_points) {
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_points)));
    return cyclic_rips::make_vr_digraph(random_points(rng, count), random_scale(rng),
                                        rng.below(2) == 0);
}

// Grows a random core by inserting vertices that are dominated at insertion
// time, so the expected dismantling core is known by construction.
struct RandomCyclicGraph {
    CyclicGraph graph;
    int expected_core_n;
    int expected_core_k;
};

inline RandomCyclicGraph random_cyclic_graph(Rng& rng, int max_n) {
    int core_n = 1;
    int core_k = 0;
    if (max_n >= 3 && rng.below(4) != 0) {
        core_n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 2)));
        core_k = static_cast<int>(rng.below(static_cast<std::uint64_t>((core_n - 1) / 2 + 1)));
    }
    std::vector<int> reach(static_cast<std::size_t>(core_n), core_k);
    int budget = max_n - core_n;
    int insertions = budget > 0 ? static_cast<int>(rng.below(static_cast<std::uint64_t>(budget + 1))) : 0;
    for (int step = 0; step < insertions; ++step) {
        const int m = static_cast<int>(reach.size());
        bool inserted = false;
        for (int attempt = 0; attempt < 24 && !inserted; ++attempt) {
            int pos = static_cast<int>(rng.below(static_cast<std::uint64_t>(m + 1)));
            int successor_old = pos % m;
            std::vector<int> grown(reach.size() + 1);
            for (int i_old = 0; i_old < m; ++i_old) {
                int gains = 0;
                int d = ((successor_old - i_old) % m + m) % m;
                if (d >= 1 && d <= reach[static_cast<std::size_t>(i_old)]) gains = 1;
                int i_new = i_old < pos ? i_old : i_old + 1;
                grown[static_cast<std::size_t>(i_new)] = reach[static_cast<std::size_t>(i_old)] + gains;
            }
            int predecessor_new = (pos - 1 + m + 1) % (m + 1);
            int lo = std::max(1, grown[static_cast<std::size_t>(predecessor_new)] - 1);
            int hi = std::min(reach[static_cast<std::size_t>(successor_old)] + 1, m);
            if (lo > hi) continue;
            grown[static_cast<std::size_t>(pos)] =
                lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
            try {
                auto candidate = CyclicGraph::from_reach(grown);
                if (!cyclic_rips::is_dominated(candidate, pos)) continue;
                reach = std::move(grown);
                inserted = true;
            } catch (const std::invalid_argument&) {
                continue;
            }
        }
        if (!inserted) break;
    }
    return {CyclicGraph::from_reach(reach), core_n, core_k};
}

} // namespace oracles
