#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "cyclic_rips/rational.hpp"
#include "cyclic_rips/rng.hpp"

namespace cyclic_rips {

/// A point of the unit-circumference circle, held as an exact rational in
/// [0, 1). Equality is exact rational equality; all geometry downstream
/// stays decidable, including ties at critical distances.
class CirclePoint {
public:
    CirclePoint() : value_(0) {}

    /// Requires 0 <= value < 1; use wrap() to reduce an arbitrary rational.
    explicit CirclePoint(Rational value);

    /// Reduces an arbitrary rational mod 1.
    static CirclePoint wrap(const Rational& value) { return CirclePoint(mod1(value)); }

    const Rational& value() const { return value_; }

    friend bool operator==(const CirclePoint& a, const CirclePoint& b) { return a.value_ == b.value_; }
    friend bool operator!=(const CirclePoint& a, const CirclePoint& b) { return a.value_ != b.value_; }
    friend bool operator<(const CirclePoint& a, const CirclePoint& b) { return a.value_ < b.value_; }

private:
    Rational value_;
};

/// Clockwise distance from a to b: (b - a) mod 1.
Rational clockwise_distance(const CirclePoint& a, const CirclePoint& b);

/// Unsigned arc distance: min of the two clockwise directions.
Rational circle_distance(const CirclePoint& a, const CirclePoint& b);

/// A finite subset of the circle in clockwise order starting at the point
/// closest to 0. Immutable after construction.
class PointConfiguration {
public:
    PointConfiguration() = default;

    /// Sorts the input; throws std::invalid_argument on duplicates.
    static PointConfiguration from_points(std::vector<CirclePoint> points);

    /// Trusted path for callers that already hold a strictly increasing list.
    static PointConfiguration from_sorted(std::vector<CirclePoint> points);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const CirclePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<CirclePoint>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool contains(const CirclePoint& p) const;
    std::optional<std::size_t> index_of(const CirclePoint& p) const;

    /// Consecutive clockwise gaps including the wrap gap; sums to 1.
    /// A singleton has the single gap 1.
    std::vector<Rational> gaps() const;
    Rational max_gap() const;

    PointConfiguration with_point(const CirclePoint& p) const;

    friend bool operator==(const PointConfiguration& a, const PointConfiguration& b) {
        return a.points_ == b.points_;
    }

private:
    std::vector<CirclePoint> points_;
};

/// The vertex set {0, 1/n, ..., (n-1)/n} of the regular inscribed n-gon.
PointConfiguration regular_ngon(int n);

/// True iff every consecutive clockwise gap (wrap included) is strictly
/// less than 2*eps. Throws std::invalid_argument on an empty configuration.
bool is_epsilon_covering(const PointConfiguration& x, const Rational& eps);

struct RegularSubsetWitness {
    /// m points of X, the i-th lying within open distance eps of phase + i/m.
    std::vector<CirclePoint> points;
    Rational phase;
};

/// Searches for an m-subset of X matching some rotated regular m-gon with
/// every displacement strictly below eps (unsigned arc metric). The search
/// is exact: it tests the finitely many critical phases where a
/// point-to-vertex distance equals eps, the phases aligning a point with a
/// vertex, and the midpoints between consecutive candidates, so a negative
/// answer is a proof of absence.
std::optional<RegularSubsetWitness> find_regular_subset(const PointConfiguration& x,
                                                        const Rational& eps, int m);

/// Decision-only variant that scales to large configurations (sweep over
/// gon phases instead of explicit matching). Exact; agrees with
/// find_regular_subset.
bool has_regular_subset(const PointConfiguration& x, const Rational& eps, int m);

/// count exact dyadic rationals u/2^64 with u a fresh 64-bit draw;
/// duplicate draws are rejected and redrawn.
PointConfiguration sample_uniform(Rng& rng, std::size_t count);

} // namespace cyclic_rips
