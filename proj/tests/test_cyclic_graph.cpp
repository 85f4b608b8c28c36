#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cyclic_rips/cyclic_graph.hpp"
#include "cyclic_rips/errors.hpp"
#include "oracles.hpp"

using namespace cyclic_rips;

namespace {

Rational rat(long long p, long long q) { return Rational(p, q); }

PointConfiguration five_points() {
    return PointConfiguration::from_points({
        CirclePoint(rat(0, 1)),
        CirclePoint(rat(1, 8)),
        CirclePoint(rat(1, 4)),
        CirclePoint(rat(1, 2)),
        CirclePoint(rat(3, 4)),
    });
}

std::set<std::pair<int, int>> edges_of(const CyclicGraph& g) {
    std::set<std::pair<int, int>> result;
    for (int i = 0; i < g.n(); ++i) {
        for (int j = 0; j < g.n(); ++j) {
            if (i != j && g.has_edge(i, j)) result.emplace(i, j);
        }
    }
    return result;
}

// A 6-cycle with alternating long and short out-reach; its odd vertices are
// dominated, and no circle configuration realizes it.
CyclicGraph alternating_hexagon() { return CyclicGraph::from_reach({2, 1, 2, 1, 2, 1}); }

} // namespace

TEST_CASE("circulant construction") {
    auto g = make_cnk(6, 2);
    CHECK(g.n() == 6);
    for (int i = 0; i < 6; ++i) CHECK(g.reach(i) == 2);
    CHECK(edges_of(g).size() == 12);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(2, 0));

    auto edgeless = make_cnk(5, 0);
    CHECK(edges_of(edgeless).empty());
    CHECK_FALSE(edgeless.has_directed_cycle());

    auto cycle = make_cnk(4, 1);
    CHECK(edges_of(cycle) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(cycle.has_directed_cycle());

    CHECK_THROWS_WITH_AS(make_cnk(3, 2), "parameter out of range", std::invalid_argument);
    CHECK_THROWS_AS(make_cnk(4, 2), std::invalid_argument);
}

TEST_CASE("vr digraph of the five-point example") {
    auto g = make_vr_digraph(five_points(), rat(1, 4), false);
    // vertices in clockwise order: 0, 1/8, 1/4, 1/2, 3/4
    CHECK(edges_of(g) ==
          std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_THROWS_AS(make_vr_digraph(five_points(), rat(1, 2), false), std::invalid_argument);
    CHECK_THROWS_AS(make_vr_digraph(five_points(), rat(0, 1), false), std::invalid_argument);
}

TEST_CASE("vr digraph of a regular n-gon is the circulant") {
    for (int n : {3, 4, 6, 9, 12}) {
        for (int k = 0; 2 * k < n; ++k) {
            auto gon = regular_ngon(n);
            auto nonstrict = make_vr_digraph(gon, rat(k == 0 ? 1 : k, k == 0 ? 4 * n : n), false);
            if (k > 0) {
                CHECK(nonstrict.reach_vector() == make_cnk(n, k).reach_vector());
                auto strict = make_vr_digraph(gon, rat(k, n), true);
                CHECK(strict.reach_vector() == make_cnk(n, k - 1).reach_vector());
            } else {
                CHECK(nonstrict.reach_vector() == make_cnk(n, 0).reach_vector());
            }
        }
    }
}

TEST_CASE("from_reach validates the structural invariants") {
    CHECK_THROWS_AS(CyclicGraph::from_reach({1, 1}), std::invalid_argument);       // two-cycle
    CHECK_THROWS_AS(CyclicGraph::from_reach({3, 0, 0, 0}), std::invalid_argument); // nesting
    CHECK_THROWS_AS(CyclicGraph::from_reach({2, 2, 2, 2}), std::invalid_argument); // both ways
    CHECK_NOTHROW(CyclicGraph::from_reach({1, 1, 1}));
    CHECK_NOTHROW(CyclicGraph::from_reach({0}));
}

TEST_CASE("domination in the alternating hexagon and circulants") {
    auto hexagon = alternating_hexagon();
    for (int i = 0; i < 6; ++i) {
        CHECK(is_dominated(hexagon, i) == (i % 2 == 1));
    }
    auto core = make_cnk(6, 2);
    for (int i = 0; i < 6; ++i) CHECK_FALSE(is_dominated(core, i));

    auto vr = make_vr_digraph(five_points(), rat(1, 4), false);
    CHECK(is_dominated(vr, 1)); // the point 1/8
    CHECK_FALSE(is_dominated(vr, 0));
}

TEST_CASE("domination matches the set-comparison definition on random graphs") {
    Rng rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = trial % 2 == 0 ? oracles::random_vr_digraph(rng, 10)
                                : oracles::random_cyclic_graph(rng, 10).graph;
        for (int i = 0; i < g.n(); ++i) {
            CAPTURE(trial);
            CHECK(is_dominated(g, i) == oracles::dominated_by_set_comparison(g, i));
        }
    }
}

TEST_CASE("dismantling fixed points and the five-point example") {
    auto core = dismantle(make_cnk(6, 2));
    CHECK(core.removed.empty());
    CHECK(core.core.n() == 6);
    CHECK(core.core.reach(0) == 2);

    auto vr = make_vr_digraph(five_points(), rat(1, 4), false);
    auto result = dismantle(vr);
    CHECK(result.core.n() == 4);
    CHECK(result.core.reach(0) == 1);
    REQUIRE(result.removed.size() == 1);
    CHECK(result.removed_labels(vr) == std::vector<CirclePoint>{CirclePoint(rat(1, 8))});
    CHECK(result.core_vertices == std::vector<int>{0, 2, 3, 4});

    auto single = dismantle(CyclicGraph::from_reach({0}));
    CHECK(single.core.n() == 1);
    CHECK(single.core.reach(0) == 0);

    auto edgeless = dismantle(make_cnk(5, 0));
    CHECK(edgeless.removed.empty());
    CHECK(edgeless.core.n() == 5);
}

TEST_CASE("random insertions dismantle back to the seed core") {
    Rng rng(22);
    for (int trial = 0; trial < 120; ++trial) {
        auto sample = oracles::random_cyclic_graph(rng, 12);
        auto result = dismantle(sample.graph);
        CAPTURE(trial);
        CHECK(result.core.n() == sample.expected_core_n);
        CHECK(result.core.reach(0) == sample.expected_core_k);
    }
}

TEST_CASE("dismantling is confluent across removal orders") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = trial % 2 == 0 ? oracles::random_vr_digraph(rng, 12)
                                : oracles::random_cyclic_graph(rng, 12).graph;
        auto canonical = dismantle(g);
        auto randomized = dismantle_random(g, rng);
        CAPTURE(trial);
        CHECK(canonical.core.n() == randomized.core.n());
        CHECK(canonical.core.reach(0) == randomized.core.reach(0));
        CHECK(canonical.core_vertices == randomized.core_vertices);
    }
}

TEST_CASE("winding fraction through cores and basic examples") {
    auto wf = winding_fraction(make_cnk(6, 2));
    CHECK(wf.value == rat(1, 3));
    CHECK(wf.core_n == 6);
    CHECK(wf.core_k == 2);

    CHECK(winding_fraction(make_cnk(7, 0)).value == 0);
    CHECK(winding_fraction(CyclicGraph::from_reach({0})).value == 0);

    auto vr = winding_fraction(make_vr_digraph(five_points(), rat(1, 4), false));
    CHECK(vr.value == rat(1, 4));
    CHECK(vr.core_n == 4);
    CHECK(vr.core_k == 1);
}

TEST_CASE("winding fraction agrees with the rotation-number route") {
    Rng rng(24);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = trial % 2 == 0 ? oracles::random_vr_digraph(rng, 14)
                                : oracles::random_cyclic_graph(rng, 14).graph;
        CAPTURE(trial);
        CHECK(winding_fraction(g).value == winding_fraction_rotation(g));
    }
}

TEST_CASE("winding fraction equals the exhaustive homomorphism maximum") {
    Rng rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracles::random_vr_digraph(rng, 10);
        CAPTURE(trial);
        CHECK(winding_fraction(g).value == oracles::wf_oracle(g, g.n()));
    }
}

TEST_CASE("winding fraction bounds for vr digraphs") {
    Rng rng(26);
    for (int trial = 0; trial < 80; ++trial) {
        int count = 1 + static_cast<int>(rng.below(12));
        auto points = oracles::random_points(rng, count);
        auto r = oracles::random_scale(rng);
        CHECK(winding_fraction(make_vr_digraph(points, r, false)).value <= r);
        CHECK(winding_fraction(make_vr_digraph(points, r, true)).value < r);
        CHECK(winding_fraction(make_vr_digraph(points, r, true)).value <=
              winding_fraction(make_vr_digraph(points, r, false)).value);
    }
}

TEST_CASE("winding fraction is monotone under points and scale") {
    Rng rng(27);
    for (int trial = 0; trial < 40; ++trial) {
        int count = 2 + static_cast<int>(rng.below(9));
        auto points = oracles::random_points(rng, count);
        auto r = oracles::random_scale(rng);
        Rational r2 = r + (rat(1, 2) - r) / (2 + static_cast<int>(rng.below(5)));
        if (2 * r2 >= 1) continue;
        auto base = winding_fraction(make_vr_digraph(points, r, false)).value;
        CHECK(base <= winding_fraction(make_vr_digraph(points, r2, false)).value);

        auto extra = sample_uniform(rng, 1);
        if (!points.contains(extra[0])) {
            auto grown = points.with_point(extra[0]);
            CHECK(base <= winding_fraction(make_vr_digraph(grown, r, false)).value);
        }
    }
}

TEST_CASE("coverings force winding fractions and conversely") {
    Rng rng(28);
    int forward_hits = 0, converse_hits = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int count = 3 + static_cast<int>(rng.below(20));
        auto points = oracles::random_points(rng, count);
        auto r = oracles::random_scale(rng, 60);

        // covering implies a lower bound on the strict winding fraction
        Rational eps = points.max_gap() / 2 + rat(1, 1000);
        REQUIRE(is_epsilon_covering(points, eps));
        auto wf = winding_fraction(make_vr_digraph(points, r, true)).value;
        CHECK(wf > r - 2 * eps);
        if (r - 2 * eps > 0) ++forward_hits;

        // a large strict winding fraction forces a covering
        Rational rho = r / (1 - 2 * r);
        Int level_floor = floor_rat(rho);
        if (Rational(level_floor) == rho) continue;
        int l = static_cast<int>(level_floor);
        Rational singular(l, 2 * l + 1);
        if (wf > singular) {
            Rational delta = r - singular;
            CHECK(is_epsilon_covering(points, (2 * l + 1) * delta / 2));
            ++converse_hits;
        }
    }
    CHECK(forward_hits > 5);
    CHECK(converse_hits > 5);
}

TEST_CASE("cyclic homomorphism checks on fixed maps") {
    auto c62 = make_cnk(6, 2);
    VertexMap identity{c62, c62, {0, 1, 2, 3, 4, 5}};
    CHECK(check_cyclic_homomorphism(identity));

    auto c41 = make_cnk(4, 1);
    VertexMap constant{c41, c62, {0, 0, 0, 0}};
    CHECK_FALSE(check_cyclic_homomorphism(constant));

    auto edgeless = make_cnk(4, 0);
    VertexMap constant_from_acyclic{edgeless, c62, {3, 3, 3, 3}};
    CHECK(check_cyclic_homomorphism(constant_from_acyclic));

    // a fiber split into two runs is not cyclically monotone
    VertexMap split{edgeless, c62, {0, 1, 0, 2}};
    CHECK_FALSE(check_cyclic_homomorphism(split));
}

TEST_CASE("theta maps into blown-up circulants are cyclic homomorphisms") {
    for (int l : {1, 2}) {
        for (int d : {1, 2, 3}) {
            const int n = d * (2 * l + 1);
            auto source = make_cnk(2 * l + 1, l);
            auto target = make_cnk(n, d * l);
            for (int a = 0; a < n; ++a) {
                VertexMap theta{source, target, {}};
                theta.assignment.resize(static_cast<std::size_t>(2 * l + 1));
                for (int i = 0; i <= 2 * l; ++i) {
                    theta.assignment[static_cast<std::size_t>(i)] = (a + d * i) % n;
                }
                CAPTURE(l);
                CAPTURE(d);
                CAPTURE(a);
                CHECK(check_cyclic_homomorphism(theta));
            }
        }
    }
}

TEST_CASE("homomorphism check agrees with the literal definition on random maps") {
    Rng rng(29);
    int accepted = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto g = oracles::random_cyclic_graph(rng, 7).graph;
        auto h = oracles::random_cyclic_graph(rng, 7).graph;
        VertexMap map{g, h, {}};
        map.assignment.resize(static_cast<std::size_t>(g.n()));
        // half arbitrary maps, half cyclically plausible ones
        if (trial % 2 == 0) {
            for (auto& v : map.assignment) {
                v = static_cast<int>(rng.below(static_cast<std::uint64_t>(h.n())));
            }
        } else {
            int offset = static_cast<int>(rng.below(static_cast<std::uint64_t>(h.n())));
            for (std::size_t i = 0; i < map.assignment.size(); ++i) {
                map.assignment[i] = (offset + static_cast<int>(i) * h.n() / g.n()) % h.n();
            }
        }
        bool fast = check_cyclic_homomorphism(map);
        bool literal = oracles::cyclic_homomorphism_literal(map);
        CAPTURE(trial);
        CHECK(fast == literal);
        if (fast) ++accepted;
    }
    CHECK(accepted > 0);
}

TEST_CASE("homomorphism construction matches the winding fraction order") {
    auto c41 = make_cnk(4, 1);
    auto c62 = make_cnk(6, 2);
    auto forward = build_homomorphism(c41, c62);
    REQUIRE(forward.has_value());
    CHECK(check_cyclic_homomorphism(*forward));
    CHECK_FALSE(build_homomorphism(c62, c41).has_value());
}

TEST_CASE("homomorphism construction agrees with exhaustive search") {
    Rng rng(30);
    int present = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracles::random_vr_digraph(rng, 8);
        auto h = oracles::random_vr_digraph(rng, 8);
        auto built = build_homomorphism(g, h);
        bool expected = oracles::exists_cyclic_homomorphism(g, h);
        CAPTURE(trial);
        CHECK(built.has_value() == expected);
        if (built) {
            CHECK(check_cyclic_homomorphism(*built));
            CHECK(oracles::cyclic_homomorphism_literal(*built));
            ++present;
        }
    }
    CHECK(present > 10);
}

TEST_CASE("composition of cyclic homomorphisms is a cyclic homomorphism") {
    Rng rng(31);
    int composed = 0;
    for (int trial = 0; trial < 120 && composed < 40; ++trial) {
        auto g = oracles::random_vr_digraph(rng, 7);
        auto h = oracles::random_vr_digraph(rng, 7);
        auto k = oracles::random_vr_digraph(rng, 7);
        auto f1 = build_homomorphism(g, h);
        auto f2 = build_homomorphism(h, k);
        if (!f1 || !f2) continue;
        VertexMap composite{g, k, {}};
        composite.assignment.resize(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) {
            composite.assignment[static_cast<std::size_t>(v)] =
                f2->assignment[static_cast<std::size_t>(
                    f1->assignment[static_cast<std::size_t>(v)])];
        }
        CAPTURE(trial);
        CHECK(check_cyclic_homomorphism(composite));
        ++composed;
    }
    CHECK(composed >= 20);
}
