#include "cyclic_rips/cyclic_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cyclic_rips/errors.hpp"

namespace cyclic_rips {

CyclicGraph CyclicGraph::from_reach(std::vector<int> reach,
                                    std::optional<std::vector<CirclePoint>> labels) {
    const int n = static_cast<int>(reach.size());
    if (n == 0) throw std::invalid_argument("cyclic graph needs at least one vertex");
    for (int i = 0; i < n; ++i) {
        int s = reach[static_cast<std::size_t>(i)];
        if (s < 0 || s > n - 1) throw std::invalid_argument("reach out of range");
    }
    for (int i = 0; i < n; ++i) {
        if (reach[static_cast<std::size_t>((i + 1) % n)] < reach[static_cast<std::size_t>(i)] - 1) {
            throw std::invalid_argument("out-neighborhood intervals do not nest");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int t = 1; t <= reach[static_cast<std::size_t>(i)]; ++t) {
            int j = (i + t) % n;
            if (reach[static_cast<std::size_t>(j)] >= n - t) {
                throw std::invalid_argument("edges oriented in both directions");
            }
        }
    }
    if (labels) {
        if (static_cast<int>(labels->size()) != n) {
            throw std::invalid_argument("label count must match vertex count");
        }
        for (int i = 1; i < n; ++i) {
            if (!((*labels)[static_cast<std::size_t>(i - 1)] < (*labels)[static_cast<std::size_t>(i)])) {
                throw std::invalid_argument("labels must be strictly increasing");
            }
        }
    }
    CyclicGraph g;
    g.reach_ = std::move(reach);
    g.labels_ = std::move(labels);
    return g;
}

bool CyclicGraph::has_edge(int i, int j) const {
    int d = forward_distance(i, j);
    return d >= 1 && d <= reach(i);
}

bool CyclicGraph::has_undirected_edge(int i, int j) const {
    return has_edge(i, j) || has_edge(j, i);
}

std::vector<int> CyclicGraph::in_reach() const {
    const int n_ = n();
    std::vector<int> result(static_cast<std::size_t>(n_), 0);
    if (n_ == 1) return result;
    // Lifted endpoints E[i] = i + reach[i mod n] are non-decreasing, so the
    // earliest in-neighbor of each vertex moves forward monotonically.
    std::vector<long long> endpoint(static_cast<std::size_t>(2 * n_));
    for (int i = 0; i < 2 * n_; ++i) {
        endpoint[static_cast<std::size_t>(i)] = i + reach(i % n_);
    }
    int p = 0;
    for (int j = n_; j < 2 * n_; ++j) {
        while (p < j && endpoint[static_cast<std::size_t>(p)] < j) ++p;
        int a = std::max(p, j - n_ + 1);
        result[static_cast<std::size_t>(j - n_)] = (a <= j - 1) ? j - a : 0;
    }
    return result;
}

bool CyclicGraph::has_directed_cycle() const {
    if (n() < 2) return false;
    return std::all_of(reach_.begin(), reach_.end(), [](int s) { return s >= 1; });
}

std::size_t CyclicGraph::edge_count() const {
    return static_cast<std::size_t>(std::accumulate(reach_.begin(), reach_.end(), 0LL));
}

CyclicGraph make_cnk(int n, int k) {
    if (n < 1 || k < 0 || 2 * k >= n) throw std::invalid_argument("parameter out of range");
    CyclicGraph g;
    g.reach_.assign(static_cast<std::size_t>(n), k);
    return g;
}

CyclicGraph make_vr_digraph(const PointConfiguration& x, const Rational& r, bool strict) {
    if (x.empty()) throw std::invalid_argument("empty configuration");
    if (r <= 0 || 2 * r >= 1) throw std::invalid_argument("scale must satisfy 0 < r < 1/2");
    const int n = static_cast<int>(x.size());
    CyclicGraph g;
    g.reach_.assign(static_cast<std::size_t>(n), 0);
    // Clockwise distances to successive points increase strictly, so the
    // out-neighborhood of each point is a prefix of its successors and the
    // farthest endpoint advances monotonically with the source.
    auto within = [&](int i, int j) {
        Rational d = clockwise_distance(x[static_cast<std::size_t>(i % n)],
                                        x[static_cast<std::size_t>(j % n)]);
        return strict ? d < r : d <= r;
    };
    int e = 0;
    for (int i = 0; i < n; ++i) {
        if (e < i) e = i;
        while (e - i < n - 1 && within(i, e + 1)) ++e;
        g.reach_[static_cast<std::size_t>(i)] = e - i;
    }
    g.labels_ = x.points();
    return g;
}

bool is_dominated(const CyclicGraph& g, int i) {
    const int n = g.n();
    if (i < 0 || i >= n) throw std::invalid_argument("vertex index out of range");
    auto t = g.in_reach();
    return t[static_cast<std::size_t>((i + 1) % n)] == t[static_cast<std::size_t>(i)] + 1;
}

struct DismantleState {
    std::vector<int> reach;
    std::vector<int> orig;

    explicit DismantleState(const CyclicGraph& g)
        : reach(g.reach_vector()), orig(g.reach_vector().size()) {
        std::iota(orig.begin(), orig.end(), 0);
    }

    int size() const { return static_cast<int>(reach.size()); }

    std::vector<int> in_reach() const {
        const int n = size();
        std::vector<int> result(static_cast<std::size_t>(n), 0);
        if (n == 1) return result;
        int p = 0;
        auto endpoint = [&](int i) { return static_cast<long long>(i) + reach[static_cast<std::size_t>(i % n)]; };
        for (int j = n; j < 2 * n; ++j) {
            while (p < j && endpoint(p) < j) ++p;
            int a = std::max(p, j - n + 1);
            result[static_cast<std::size_t>(j - n)] = (a <= j - 1) ? j - a : 0;
        }
        return result;
    }

    std::vector<int> dominated_positions() const {
        const int n = size();
        auto t = in_reach();
        std::vector<int> result;
        for (int i = 0; i < n; ++i) {
            if (t[static_cast<std::size_t>((i + 1) % n)] == t[static_cast<std::size_t>(i)] + 1) {
                result.push_back(i);
            }
        }
        return result;
    }

    void remove(int pos) {
        const int n = size();
        for (int u = 0; u < n; ++u) {
            if (u == pos) continue;
            int d = (pos - u + n) % n;
            if (d <= reach[static_cast<std::size_t>(u)]) --reach[static_cast<std::size_t>(u)];
        }
        reach.erase(reach.begin() + pos);
        orig.erase(orig.begin() + pos);
    }

    CyclicGraph core(const CyclicGraph& original) const {
        CyclicGraph c;
        c.reach_ = reach;
        if (original.labels()) {
            std::vector<CirclePoint> labels;
            labels.reserve(orig.size());
            for (int id : orig) labels.push_back((*original.labels())[static_cast<std::size_t>(id)]);
            c.labels_ = std::move(labels);
        }
        return c;
    }
};

namespace {

DismantleResult dismantle_impl(const CyclicGraph& g, Rng* rng) {
    const int n = g.n();
    DismantleState state(g);
    DismantleResult result;
    result.retraction.resize(static_cast<std::size_t>(n));
    std::iota(result.retraction.begin(), result.retraction.end(), 0);

    while (true) {
        auto dominated = state.dominated_positions();
        if (dominated.empty()) break;
        int pos = rng ? dominated[static_cast<std::size_t>(rng->below(dominated.size()))]
                      : dominated.front();
        int removed_id = state.orig[static_cast<std::size_t>(pos)];
        int dominator_id = state.orig[static_cast<std::size_t>((pos + 1) % state.size())];
        for (auto& image : result.retraction) {
            if (image == removed_id) image = dominator_id;
        }
        result.removed.push_back(removed_id);
        state.remove(pos);
    }

    const int m = state.size();
    const int k = state.reach.front();
    for (int i = 0; i < m; ++i) {
        if (state.reach[static_cast<std::size_t>(i)] != k) {
            throw invariant_violation("dismantling endpoint has non-constant reach");
        }
    }
    if (2 * k >= m) throw invariant_violation("dismantling endpoint is not a circulant core");

    result.core = state.core(g);
    result.core_vertices = state.orig;
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < m; ++i) {
        position[static_cast<std::size_t>(state.orig[static_cast<std::size_t>(i)])] = i;
    }
    for (auto& image : result.retraction) {
        image = position[static_cast<std::size_t>(image)];
        if (image < 0) throw invariant_violation("retraction escaped the core");
    }
    return result;
}

} // namespace

std::vector<CirclePoint> DismantleResult::removed_labels(const CyclicGraph& original) const {
    std::vector<CirclePoint> result;
    if (!original.labels()) return result;
    result.reserve(removed.size());
    for (int id : removed) result.push_back((*original.labels())[static_cast<std::size_t>(id)]);
    return result;
}

DismantleResult dismantle(const CyclicGraph& g) { return dismantle_impl(g, nullptr); }

DismantleResult dismantle_random(const CyclicGraph& g, Rng& rng) { return dismantle_impl(g, &rng); }

WindingFraction winding_fraction(const CyclicGraph& g) {
    auto d = dismantle(g);
    WindingFraction wf;
    wf.core_n = d.core.n();
    wf.core_k = d.core.reach(0);
    wf.value = Rational(wf.core_k, wf.core_n);
    return wf;
}

Rational winding_fraction_rotation(const CyclicGraph& g) {
    const int n = g.n();
    if (!g.has_directed_cycle()) return Rational(0);
    // Jump to the farthest out-neighbor. The map is monotone in the cyclic
    // order, so any periodic orbit realizes the extremal winding ratio.
    std::vector<long long> first_step(static_cast<std::size_t>(n), -1);
    std::vector<long long> first_lift(static_cast<std::size_t>(n), 0);
    int v = 0;
    long long lift = 0;
    long long step = 0;
    while (first_step[static_cast<std::size_t>(v)] < 0) {
        first_step[static_cast<std::size_t>(v)] = step;
        first_lift[static_cast<std::size_t>(v)] = lift;
        lift += g.reach(v);
        v = (v + g.reach(v)) % n;
        ++step;
    }
    long long period = step - first_step[static_cast<std::size_t>(v)];
    long long winding_times_n = lift - first_lift[static_cast<std::size_t>(v)];
    if (winding_times_n % n != 0) {
        throw invariant_violation("greedy orbit does not close up to full revolutions");
    }
    return Rational(Int(winding_times_n / n), Int(period));
}

bool check_cyclic_homomorphism(const VertexMap& f) {
    const int n = f.source.n();
    const int m = f.target.n();
    if (static_cast<int>(f.assignment.size()) != n) return false;
    for (int a : f.assignment) {
        if (a < 0 || a >= m) return false;
    }

    // Edge condition.
    for (int i = 0; i < n; ++i) {
        for (int t = 1; t <= f.source.reach(i); ++t) {
            int j = (i + t) % n;
            int fi = f.assignment[static_cast<std::size_t>(i)];
            int fj = f.assignment[static_cast<std::size_t>(j)];
            if (fi == fj) continue;
            if (!f.target.has_edge(fi, fj)) return false;
        }
    }

    // Cyclic monotonicity: each fiber is one cyclic run, and the distinct
    // run images wind around the target exactly once.
    std::vector<int> run_values;
    for (int i = 0; i < n; ++i) {
        int prev = f.assignment[static_cast<std::size_t>((i + n - 1) % n)];
        if (f.assignment[static_cast<std::size_t>(i)] != prev) {
            run_values.push_back(f.assignment[static_cast<std::size_t>(i)]);
        }
    }
    const bool constant = run_values.empty();
    if (!constant) {
        std::vector<int> sorted = run_values;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return false; // a fiber splits into several runs
        }
        long long total = 0;
        const std::size_t s = run_values.size();
        for (std::size_t q = 0; q < s; ++q) {
            int a = run_values[q];
            int b = run_values[(q + 1) % s];
            total += f.target.forward_distance(a, b);
        }
        if (total != m) return false; // image fails to wind exactly once
    }

    if (f.source.has_directed_cycle() && constant) return false;
    return true;
}

std::optional<VertexMap> build_homomorphism(const CyclicGraph& g, const CyclicGraph& h) {
    auto dg = dismantle(g);
    auto dh = dismantle(h);
    const int cn = dg.core.n();
    const int ck = dg.core.reach(0);
    const int cn2 = dh.core.n();
    const int ck2 = dh.core.reach(0);
    if (Rational(ck, cn) > Rational(ck2, cn2)) return std::nullopt;

    VertexMap map;
    map.source = g;
    map.target = h;
    map.assignment.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        long long core_pos = dg.retraction[static_cast<std::size_t>(v)];
        long long stretched = core_pos * cn2;     // into C_{cn*cn2}^{ck*cn2}
        long long collapsed = stretched / cn;     // through C_{cn*cn2}^{cn*ck2}
        map.assignment[static_cast<std::size_t>(v)] =
            dh.core_vertices[static_cast<std::size_t>(collapsed)];
    }
    if (!check_cyclic_homomorphism(map)) {
        throw invariant_violation("constructed homomorphism failed verification");
    }
    return map;
}

} // namespace cyclic_rips
