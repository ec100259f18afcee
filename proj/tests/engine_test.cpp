#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rotorlab/engine.hpp"
#include "rotorlab/equivalence.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace rotorlab;

TEST_CASE("routing on the directed 3-cycle moves the chip forward") {
    auto g = fixtures::directed_3cycle();
    Drc s{{1, 0, 0}, {0, 0, 0}};
    auto out = route_at(g, s, 0);
    CHECK(out.divisor == Divisor{0, 1, 0});
    CHECK(out.rotor == s.rotor);  // out-degree one: the rotor wraps in place
}

TEST_CASE("routing advances the rotor before moving the chip") {
    auto g = fixtures::triangle().graph;
    Drc s{{1, 0, 0}, {0, 0, 0}};
    auto out = route_at(g, s, 0);
    CHECK(out.rotor == RotorConfiguration{1, 0, 0});
    CHECK(out.divisor == Divisor{0, 0, 1});  // slot 1 of a points at c
}

TEST_CASE("unconstrained routing may go negative") {
    auto g = fixtures::triangle().graph;
    Drc s{{0, 1, 0}, {0, 0, 0}};
    auto out = route_at(g, s, 0);
    CHECK(out.divisor == Divisor{-1, 1, 1});
}

TEST_CASE("legal routing requires a chip") {
    auto g = fixtures::triangle().graph;
    Drc s{{0, 1, 0}, {0, 0, 0}};
    CHECK_THROWS_WITH_AS(route_at(g, s, 0, true), "illegal routing: no chip at v0",
                         std::invalid_argument);
    CHECK_NOTHROW(route_at(g, s, 1, true));
}

TEST_CASE("route_at validates the state") {
    auto g = fixtures::triangle().graph;
    CHECK_THROWS_AS(route_at(g, Drc{{1, 0}, {0, 0, 0}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(route_at(g, Drc{{1, 0, 0}, {0, 0, 2}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(route_at(g, Drc{{1, 0, 0}, {0, 0, 0}}, 5), std::invalid_argument);
}

TEST_CASE("zero routing vector is the identity") {
    auto g = fixtures::triangle().graph;
    Drc s{{3, -1, 2}, {1, 0, 1}};
    CHECK(apply_routing_vector(g, s, RoutingVector(3, 0)) == s);
}

TEST_CASE("full turns times the period are the identity") {
    std::mt19937 rng(6100);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<RibbonDigraph> graphs{fixtures::directed_3cycle(), fixtures::triangle().graph,
                                      fixtures::lopsided_pair()};
    for (int i = 0; i < 10; ++i) graphs.push_back(oracle::random_strongly_connected(rng, 2, 5, 5, 3));
    for (const auto& g : graphs) {
        auto per = period_vector(g);
        RoutingVector r(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) r[v] = per[v] * g.out_degree(v);
        Drc s;
        s.divisor.resize(g.vertex_count());
        s.rotor.resize(g.vertex_count());
        for (auto& e : s.divisor) e = entry(rng);
        for (int v = 0; v < g.vertex_count(); ++v) {
            s.rotor[v] = std::uniform_int_distribution<int>(0, g.out_degree(v) - 1)(rng);
        }
        CHECK(apply_routing_vector(g, s, r) == s);
    }
}

TEST_CASE("a unit routing vector equals a single routing") {
    auto g = fixtures::triangle().graph;
    Drc s{{0, 2, -1}, {1, 1, 0}};
    for (int v = 0; v < 3; ++v) {
        RoutingVector r(3, 0);
        r[v] = 1;
        CHECK(apply_routing_vector(g, s, r) == route_at(g, s, v));
    }
}

TEST_CASE("routing vectors are order independent and match the oracle") {
    std::mt19937 rng(6200);
    for (int i = 0; i < 25; ++i) {
        auto g = oracle::random_strongly_connected(rng, 2, 5, 5, 2);
        const int n = g.vertex_count();
        oracle::TinyState t;
        t.chips.resize(n);
        t.slots.resize(n);
        for (auto& c : t.chips) c = std::uniform_int_distribution<int>(-2, 3)(rng);
        for (int v = 0; v < n; ++v) {
            t.slots[v] = std::uniform_int_distribution<int>(0, g.out_degree(v) - 1)(rng);
        }
        std::vector<long long> r(n);
        for (auto& e : r) e = std::uniform_int_distribution<int>(0, 9)(rng);

        // One routing at a time, in a shuffled order.
        std::vector<int> sequence;
        for (int v = 0; v < n; ++v) sequence.insert(sequence.end(), r[v], v);
        std::shuffle(sequence.begin(), sequence.end(), rng);
        oracle::TinyState stepped = t;
        for (int v : sequence) stepped = oracle::route_def(g, stepped, v);

        CHECK(oracle::apply_vector_def(g, t, r) == stepped);
        RoutingVector big(r.begin(), r.end());
        CHECK(apply_routing_vector(g, oracle::to_drc(t), big) == oracle::to_drc(stepped));
    }
}

TEST_CASE("firing adds the Laplacian column") {
    auto g = fixtures::triangle().graph;
    auto l = laplacian(g);
    Drc s{{5, 0, -2}, {1, 1, 0}};
    for (int v = 0; v < 3; ++v) {
        auto fired = fire_at(g, s, v);
        CHECK(fired.rotor == s.rotor);
        for (int u = 0; u < 3; ++u) CHECK(fired.divisor[u] == s.divisor[u] + l(u, v));
    }
}

TEST_CASE("classical step moves the single chip") {
    auto g = fixtures::directed_3cycle();
    Drc s{{1, 0, 0}, {0, 0, 0}};
    CHECK(classical_step(g, s).divisor == Divisor{0, 1, 0});
    CHECK_THROWS_AS(classical_step(g, Drc{{1, 1, 0}, {0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(classical_step(g, Drc{{2, 0, 0}, {0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("classical step preserves unicycles") {
    auto g = fixtures::triangle().graph;
    for (const Drc& u : enumerate_unicycles(g)) {
        REQUIRE(is_unicycle(g, u));
        CHECK(is_unicycle(g, classical_step(g, u)));
    }
}

TEST_CASE("the classical walk closes exactly at the orbit size") {
    std::vector<RibbonDigraph> graphs{fixtures::directed_3cycle(), fixtures::triangle().graph,
                                      fixtures::lopsided_pair()};
    std::vector<int> sizes{3, 6, 4};
    for (size_t i = 0; i < graphs.size(); ++i) {
        const auto& g = graphs[i];
        CHECK(orbit_size(g) == sizes[i]);
        Drc u = enumerate_unicycles(g).front();
        std::set<Drc> seen;
        Drc cur = u;
        for (int step = 0; step < sizes[i]; ++step) {
            CHECK(seen.insert(cur).second);  // no earlier repeat
            cur = classical_step(g, cur);
        }
        CHECK(cur == u);
    }
}

TEST_CASE("unicycle predicate frozen cases") {
    auto cyc = fixtures::directed_3cycle();
    for (int v = 0; v < 3; ++v) {
        Divisor x(3, 0);
        x[v] = 1;
        CHECK(is_unicycle(cyc, {x, {0, 0, 0}}));
    }

    auto tri = fixtures::triangle().graph;
    // Rotor 2-cycle {v0, v1}; v2 hangs off it.
    RotorConfiguration two_cycle{0, 1, 0};
    CHECK_FALSE(is_unicycle(tri, {{0, 0, 1}, two_cycle}));
    CHECK(is_unicycle(tri, {{1, 0, 0}, two_cycle}));
    CHECK_FALSE(is_unicycle(tri, {{1, 1, 0}, two_cycle}));
}

TEST_CASE("recurrence frozen cases match the state-space oracle") {
    auto tri = fixtures::triangle().graph;
    for (const Drc& u : enumerate_unicycles(tri)) CHECK(is_recurrent(tri, u));
    CHECK_FALSE(is_recurrent(tri, {{-1, 2, 0}, {0, 0, 0}}));

    RotorConfiguration two_cycle{0, 1, 0};
    Drc no_chip_on_cycle{{0, 0, 1}, two_cycle};
    Drc chip_on_cycle{{1, 0, 1}, two_cycle};
    CHECK_FALSE(is_recurrent(tri, no_chip_on_cycle));
    CHECK(is_recurrent(tri, chip_on_cycle));

    oracle::StateSpace space;
    space.explore(tri, {oracle::to_tiny(no_chip_on_cycle), oracle::to_tiny(chip_on_cycle)});
    CHECK_FALSE(space.recurrent(space.id_of(oracle::to_tiny(no_chip_on_cycle))));
    CHECK(space.recurrent(space.id_of(oracle::to_tiny(chip_on_cycle))));
}

TEST_CASE("return game on the directed 3-cycle") {
    auto g = fixtures::directed_3cycle();
    Drc s{{1, 0, 0}, {0, 0, 0}};
    auto trace = return_game(g, s);
    CHECK(trace.routed == std::vector<int>{0, 1, 2});
    CHECK(trace.final == s);
}

TEST_CASE("return game routes every vertex outdeg times period") {
    std::vector<std::pair<RibbonDigraph, Drc>> cases;
    cases.push_back({fixtures::triangle().graph, Drc{{1, 0, 0}, {0, 0, 0}}});
    cases.push_back({fixtures::lopsided_pair(), Drc{{1, 0}, {0, 0}}});
    cases.push_back({fixtures::triangle().graph, Drc{{1, 0, 1}, {0, 1, 0}}});
    for (const auto& [g, s] : cases) {
        REQUIRE(is_recurrent(g, s));
        auto per = period_vector(g);
        auto trace = return_game(g, s);
        CHECK(trace.final == s);
        CHECK(BigInt(trace.routed.size()) == orbit_size(g));
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto count = std::count(trace.routed.begin(), trace.routed.end(), v);
            CHECK(count == per[v] * g.out_degree(v));
        }

        // Replaying the trace with the definition-level oracle, every step
        // legal, reproduces the start.
        oracle::TinyState cur = oracle::to_tiny(s);
        for (int v : trace.routed) {
            REQUIRE(cur.chips[v] > 0);
            cur = oracle::route_def(g, cur, v);
        }
        CHECK(cur == oracle::to_tiny(s));
    }
}

TEST_CASE("return game preconditions and budget") {
    auto g = fixtures::triangle().graph;
    CHECK_THROWS_AS(return_game(g, Drc{{0, 0, 1}, {0, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(return_game(g, Drc{{1, 0, 0}, {0, 0, 0}}, 2), BudgetExceeded);
}

TEST_CASE("legal play from a unicycle cycles through its whole orbit") {
    std::vector<RibbonDigraph> graphs{fixtures::directed_3cycle(), fixtures::triangle().graph,
                                      fixtures::lopsided_pair()};
    for (const auto& g : graphs) {
        Drc u = enumerate_unicycles(g).front();
        auto result = run_legal_until_repeat(g, u);
        CHECK(result.state == u);
        CHECK(result.steps_to_enter == 0);
        CHECK(BigInt(result.cycle_length) == orbit_size(g));
    }
}

TEST_CASE("legal play settles into a unicycle from a one-chip start") {
    auto g = fixtures::triangle().graph;
    Drc s{{1, 0, 0}, {0, 0, 1}};  // rotor cycle {v1, v2}, chip off it
    REQUIRE_FALSE(is_recurrent(g, s));
    auto result = run_legal_until_repeat(g, s);
    CHECK(is_unicycle(g, result.state));
    CHECK(result.steps_to_enter > 0);
}

TEST_CASE("legal play preconditions and budget") {
    auto g = fixtures::triangle().graph;
    CHECK_THROWS_AS(run_legal_until_repeat(g, Drc{{1, -1, 0}, {0, 0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_legal_until_repeat(g, Drc{{1, 0, 0}, {0, 0, 0}}, 3), BudgetExceeded);
}

TEST_CASE("every routing preserves the degree") {
    std::mt19937 rng(6300);
    for (int i = 0; i < 20; ++i) {
        auto g = oracle::random_strongly_connected(rng, 2, 6, 6, 3);
        const int n = g.vertex_count();
        Drc s;
        s.divisor.resize(n);
        s.rotor.resize(n);
        for (auto& e : s.divisor) e = std::uniform_int_distribution<int>(-4, 4)(rng);
        for (int v = 0; v < n; ++v) {
            s.rotor[v] = std::uniform_int_distribution<int>(0, g.out_degree(v) - 1)(rng);
        }
        BigInt degree = divisor_degree(s.divisor);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        CHECK(divisor_degree(route_at(g, s, v).divisor) == degree);
        CHECK(divisor_degree(fire_at(g, s, v).divisor) == degree);
        RoutingVector r(n);
        for (auto& e : r) e = std::uniform_int_distribution<int>(0, 7)(rng);
        CHECK(divisor_degree(apply_routing_vector(g, s, r).divisor) == degree);
    }
}

TEST_CASE("shortest brute-force return games respect the period quota") {
    auto g = fixtures::triangle().graph;
    Drc start{{1, 0, 1}, {0, 1, 0}};
    REQUIRE(is_recurrent(g, start));
    oracle::StateSpace space;
    space.explore(g, {oracle::to_tiny(start)});
    auto game = space.shortest_return(space.id_of(oracle::to_tiny(start)));
    REQUIRE(game.has_value());
    auto per = period_vector(g);
    for (int v = 0; v < 3; ++v) {
        auto count = std::count(game->begin(), game->end(), v);
        CHECK(BigInt(count) == per[v] * g.out_degree(v));  // k = 1 is reachable
    }
}
