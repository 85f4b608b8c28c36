#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cyclic_rips/circle.hpp"
#include "oracles.hpp"

using namespace cyclic_rips;

namespace {
Rational rat(long long p, long long q) { return Rational(p, q); }
CirclePoint pt(long long p, long long q) { return CirclePoint(rat(p, q)); }
} // namespace

TEST_CASE("clockwise distance basics") {
    CHECK(clockwise_distance(pt(0, 1), pt(3, 4)) == rat(3, 4));
    CHECK(clockwise_distance(pt(3, 4), pt(0, 1)) == rat(1, 4));
    CHECK(clockwise_distance(pt(1, 3), pt(1, 3)) == 0);
}

TEST_CASE("clockwise distance complement identity on random pairs") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        auto points = sample_uniform(rng, 2);
        Rational ab = clockwise_distance(points[0], points[1]);
        Rational ba = clockwise_distance(points[1], points[0]);
        CHECK(ab >= 0);
        CHECK(ab < 1);
        CHECK(ab + ba == 1);
    }
}

TEST_CASE("point configuration rejects duplicates and sorts") {
    CHECK_THROWS_AS(PointConfiguration::from_points({pt(1, 2), pt(1, 2)}), std::invalid_argument);
    auto config = PointConfiguration::from_points({pt(3, 4), pt(1, 4), pt(0, 1)});
    CHECK(config[0] == pt(0, 1));
    CHECK(config[2] == pt(3, 4));
    Rational total = 0;
    for (const auto& gap : config.gaps()) total += gap;
    CHECK(total == 1);
}

TEST_CASE("covering test on the square configuration") {
    auto square = regular_ngon(4);
    CHECK(is_epsilon_covering(square, rat(13, 100)));
    CHECK_FALSE(is_epsilon_covering(square, rat(1, 8)));
    auto single = PointConfiguration::from_points({pt(0, 1)});
    CHECK(is_epsilon_covering(single, rat(3, 5)));
    CHECK_THROWS_WITH_AS(is_epsilon_covering(PointConfiguration{}, rat(1, 2)),
                         "empty set has no covering radius", std::invalid_argument);
}

TEST_CASE("covering is monotone in eps") {
    Rng rng(12);
    for (int i = 0; i < 50; ++i) {
        auto points = sample_uniform(rng, 1 + static_cast<int>(rng.below(10)));
        Rational eps = oracles::random_scale(rng);
        if (is_epsilon_covering(points, eps)) {
            CHECK(is_epsilon_covering(points, eps * 2));
            CHECK(is_epsilon_covering(points, eps + rat(1, 7)));
        }
    }
}

TEST_CASE("regular subset on the exact 3-gon") {
    auto gon = regular_ngon(3);
    auto found = find_regular_subset(gon, rat(1, 100), 3);
    REQUIRE(found.has_value());
    CHECK(found->points.size() == 3);
    CHECK_FALSE(find_regular_subset(gon, rat(1, 100), 4).has_value());
}

TEST_CASE("exact m-gon is a regular subset of itself for every positive eps") {
    for (int m : {1, 2, 3, 5, 8}) {
        auto gon = regular_ngon(m);
        for (auto eps : {rat(1, 1000000), rat(1, 10), rat(2, 5)}) {
            CAPTURE(m);
            CHECK(find_regular_subset(gon, eps, m).has_value());
            CHECK(has_regular_subset(gon, eps, m));
        }
    }
}

TEST_CASE("regular subset search agrees with the brute-force oracle") {
    Rng rng(13);
    int found_count = 0;
    for (int i = 0; i < 120; ++i) {
        int count = 1 + static_cast<int>(rng.below(12));
        auto points = sample_uniform(rng, count);
        int m = 1 + static_cast<int>(rng.below(3));
        // mix tight and generous tolerances so both outcomes occur
        Rational eps = i % 2 == 0 ? Rational(1, 4 * m) : Rational(1, 20 * m);
        bool expected = oracles::regular_subset_bruteforce(points, eps, m);
        auto witness = find_regular_subset(points, eps, m);
        CAPTURE(i);
        CHECK(witness.has_value() == expected);
        CHECK(has_regular_subset(points, eps, m) == expected);
        if (expected) ++found_count;
        if (witness) {
            // the witness really does sit eps-close to the poles
            for (int j = 0; j < m; ++j) {
                auto pole = CirclePoint::wrap(witness->phase + Rational(j, m));
                CHECK(circle_distance(witness->points[static_cast<std::size_t>(j)], pole) < eps);
            }
        }
    }
    CHECK(found_count > 10); // the test exercises both branches
}

TEST_CASE("regular subset with structured near-gon inputs") {
    // 3 points near the vertices of a rotated 3-gon; the free phase can
    // absorb displacements up to 2 eps of spread, nothing beyond
    for (bool inside : {true, false}) {
        Rational eps(1, 50);
        Rational bump = inside ? 2 * eps - rat(1, 1000) : 2 * eps + rat(1, 1000);
        auto points = PointConfiguration::from_points({
            CirclePoint(mod1(rat(1, 10) + bump)),
            CirclePoint(mod1(rat(1, 10) + rat(1, 3))),
            CirclePoint(mod1(rat(1, 10) + rat(2, 3))),
        });
        CHECK(find_regular_subset(points, eps, 3).has_value() == inside);
        CHECK(has_regular_subset(points, eps, 3) == inside);
        CHECK(oracles::regular_subset_bruteforce(points, eps, 3) == inside);
    }
}

TEST_CASE("uniform sampling determinism and exactness") {
    Rng a(42), b(42), c(43);
    auto empty = sample_uniform(a, 0);
    CHECK(empty.empty());
    auto first = sample_uniform(a, 5);
    auto second = sample_uniform(b, 0).empty() ? sample_uniform(b, 5) : PointConfiguration{};
    CHECK(first.size() == 5);
    CHECK(first == second);
    auto other = sample_uniform(c, 5);
    CHECK_FALSE(first == other);
    for (const auto& p : first) {
        Int den = denominator(p.value());
        CHECK((Int(1) << 64) % den == 0); // dyadic
    }
}

TEST_CASE("uniform sampling passes a Kolmogorov-Smirnov check") {
    Rng rng(7);
    const std::size_t count = 10000;
    auto points = sample_uniform(rng, count);
    double worst = 0;
    for (std::size_t i = 0; i < count; ++i) {
        double value = static_cast<double>(points[i].value());
        double lo = static_cast<double>(i) / static_cast<double>(count);
        double hi = static_cast<double>(i + 1) / static_cast<double>(count);
        worst = std::max({worst, std::abs(value - lo), std::abs(value - hi)});
    }
    CHECK(worst < 0.02);
}
