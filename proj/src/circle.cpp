#include "cyclic_rips/circle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace cyclic_rips {

CirclePoint::CirclePoint(Rational value) : value_(std::move(value)) {
    if (value_ < 0 || value_ >= 1) {
        throw std::invalid_argument("circle point must lie in [0, 1): " + format_rational(value_));
    }
}

Rational clockwise_distance(const CirclePoint& a, const CirclePoint& b) {
    return mod1(b.value() - a.value());
}

Rational circle_distance(const CirclePoint& a, const CirclePoint& b) {
    Rational d = clockwise_distance(a, b);
    return std::min(d, Rational(1) - d);
}

PointConfiguration PointConfiguration::from_points(std::vector<CirclePoint> points) {
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i] == points[i - 1]) {
            throw std::invalid_argument("duplicate point: " + format_rational(points[i].value()));
        }
    }
    PointConfiguration config;
    config.points_ = std::move(points);
    return config;
}

PointConfiguration PointConfiguration::from_sorted(std::vector<CirclePoint> points) {
    PointConfiguration config;
    config.points_ = std::move(points);
    return config;
}

bool PointConfiguration::contains(const CirclePoint& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

std::optional<std::size_t> PointConfiguration::index_of(const CirclePoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it != points_.end() && *it == p) return static_cast<std::size_t>(it - points_.begin());
    return std::nullopt;
}

std::vector<Rational> PointConfiguration::gaps() const {
    std::vector<Rational> result;
    const std::size_t s = points_.size();
    if (s == 0) return result;
    if (s == 1) {
        result.emplace_back(1);
        return result;
    }
    result.reserve(s);
    for (std::size_t i = 0; i + 1 < s; ++i) {
        result.push_back(points_[i + 1].value() - points_[i].value());
    }
    result.push_back(Rational(1) - points_.back().value() + points_.front().value());
    return result;
}

Rational PointConfiguration::max_gap() const {
    auto g = gaps();
    if (g.empty()) throw std::invalid_argument("empty configuration has no gaps");
    return *std::max_element(g.begin(), g.end());
}

PointConfiguration PointConfiguration::with_point(const CirclePoint& p) const {
    auto pts = points_;
    auto it = std::lower_bound(pts.begin(), pts.end(), p);
    if (it != pts.end() && *it == p) {
        throw std::invalid_argument("duplicate point: " + format_rational(p.value()));
    }
    pts.insert(it, p);
    return from_sorted(std::move(pts));
}

PointConfiguration regular_ngon(int n) {
    if (n < 1) throw std::invalid_argument("n-gon needs n >= 1");
    std::vector<CirclePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.emplace_back(Rational(i, n));
    return PointConfiguration::from_sorted(std::move(pts));
}

bool is_epsilon_covering(const PointConfiguration& x, const Rational& eps) {
    if (x.empty()) throw std::invalid_argument("empty set has no covering radius");
    const Rational bound = 2 * eps;
    for (const auto& g : x.gaps()) {
        if (g >= bound) return false;
    }
    return true;
}

namespace {

// Phase arithmetic for rotated regular m-gons lives on the circle of
// circumference 1/m: shifting the phase by 1/m reproduces the same gon.
Rational mod_period(const Rational& x, const Rational& period) {
    Rational q = x / period;
    return x - Rational(floor_rat(q)) * period;
}

// Bipartite matching: pole j may take any point within open distance eps of
// it; returns an assignment pole -> point index saturating all m poles.
std::optional<std::vector<int>> match_poles(const PointConfiguration& x, const Rational& eps,
                                            int m, const Rational& phase) {
    const int s = static_cast<int>(x.size());
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        CirclePoint pole = CirclePoint::wrap(phase + Rational(j, m));
        for (int i = 0; i < s; ++i) {
            if (circle_distance(x[static_cast<std::size_t>(i)], pole) < eps) {
                candidates[static_cast<std::size_t>(j)].push_back(i);
            }
        }
        if (candidates[static_cast<std::size_t>(j)].empty()) return std::nullopt;
    }
    std::vector<int> pole_of_point(static_cast<std::size_t>(s), -1);
    std::vector<int> point_of_pole(static_cast<std::size_t>(m), -1);
    std::vector<char> visited;
    auto augment = [&](auto&& self, int pole) -> bool {
        for (int i : candidates[static_cast<std::size_t>(pole)]) {
            if (visited[static_cast<std::size_t>(i)]) continue;
            visited[static_cast<std::size_t>(i)] = 1;
            if (pole_of_point[static_cast<std::size_t>(i)] == -1 ||
                self(self, pole_of_point[static_cast<std::size_t>(i)])) {
                pole_of_point[static_cast<std::size_t>(i)] = pole;
                point_of_pole[static_cast<std::size_t>(pole)] = i;
                return true;
            }
        }
        return false;
    };
    for (int j = 0; j < m; ++j) {
        visited.assign(static_cast<std::size_t>(s), 0);
        if (!augment(augment, j)) return std::nullopt;
    }
    return point_of_pole;
}

} // namespace

std::optional<RegularSubsetWitness> find_regular_subset(const PointConfiguration& x,
                                                        const Rational& eps, int m) {
    if (m < 1) throw std::invalid_argument("regular subset needs m >= 1");
    if (static_cast<std::size_t>(m) > x.size() || eps <= 0) return std::nullopt;

    const Rational period(1, m);
    // Candidate phases: alignments (point exactly on a vertex), criticals
    // (point-to-vertex distance exactly eps), and midpoints between cyclically
    // consecutive candidates. The feasible phase set is a finite union of
    // open arcs whose endpoints are critical phases, so this set of samples
    // decides existence exactly.
    std::vector<Rational> cuts;
    for (const auto& p : x) {
        for (int j = 0; j < m; ++j) {
            Rational base = p.value() - Rational(j, m);
            cuts.push_back(mod_period(base, period));
            cuts.push_back(mod_period(base - eps, period));
            cuts.push_back(mod_period(base + eps, period));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Rational> samples = cuts;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const Rational& a = cuts[i];
        Rational b = (i + 1 < cuts.size()) ? cuts[i + 1] : cuts.front() + period;
        samples.push_back(mod_period((a + b) / 2, period));
    }
    if (samples.empty()) samples.emplace_back(0);

    for (const auto& t : samples) {
        if (auto assignment = match_poles(x, eps, m, t)) {
            RegularSubsetWitness witness;
            witness.phase = t;
            witness.points.reserve(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j) {
                witness.points.push_back(x[static_cast<std::size_t>((*assignment)[static_cast<std::size_t>(j)])]);
            }
            return witness;
        }
    }
    return std::nullopt;
}

bool has_regular_subset(const PointConfiguration& x, const Rational& eps, int m) {
    if (m < 1) throw std::invalid_argument("regular subset needs m >= 1");
    if (static_cast<std::size_t>(m) > x.size() || eps <= 0) return false;
    // The sweep assumes each point is near at most one gon vertex at a time.
    if (2 * eps * m >= 1) return find_regular_subset(x, eps, m).has_value();

    const Rational period(1, m);
    // Each point x = p/m + c contributes the open phase window (c-eps, c+eps)
    // during which it sits within eps of vertex number p; the part of the
    // window that wraps past 0 or 1/m serves the neighboring vertex instead.
    struct Event {
        Rational at;
        int color;
        int delta;
    };
    std::vector<Event> events;
    events.reserve(x.size() * 4);
    auto add_arc = [&](const Rational& lo, const Rational& hi, int color) {
        if (lo < hi) {
            events.push_back({lo, color, +1});
            events.push_back({hi, color, -1});
        }
    };
    for (const auto& pt : x) {
        Rational scaled = pt.value() * m;
        Int p = floor_rat(scaled);
        int color = static_cast<int>(p % m);
        Rational c = pt.value() - Rational(p, m);
        Rational lo = c - eps;
        Rational hi = c + eps;
        if (lo < 0) {
            add_arc(Rational(0), hi, color);
            add_arc(lo + period, period, (color + m - 1) % m);
        } else if (hi > period) {
            add_arc(lo, period, color);
            add_arc(Rational(0), hi - period, (color + 1) % m);
        } else {
            add_arc(lo, hi, color);
        }
    }
    if (events.empty()) return false;
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.at < b.at; });

    std::vector<int> active(static_cast<std::size_t>(m), 0);
    int covered = 0;
    std::size_t i = 0;
    while (i < events.size()) {
        std::size_t j = i;
        while (j < events.size() && events[j].at == events[i].at) {
            auto& count = active[static_cast<std::size_t>(events[j].color)];
            if (count == 0 && events[j].delta > 0) ++covered;
            count += events[j].delta;
            if (count == 0 && events[j].delta < 0) --covered;
            ++j;
        }
        // state now holds on the open interval up to the next event
        if (covered == m) return true;
        i = j;
    }
    return false;
}

PointConfiguration sample_uniform(Rng& rng, std::size_t count) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<CirclePoint> pts;
    pts.reserve(count);
    const Int denom = Int(1) << 64;
    while (pts.size() < count) {
        std::uint64_t u = rng.next_u64();
        if (!seen.insert(u).second) continue;
        pts.emplace_back(Rational(Int(u), denom));
    }
    return PointConfiguration::from_points(std::move(pts));
}

} // namespace cyclic_rips
