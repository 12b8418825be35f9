#include <doctest.h>

#include <algorithm>
#include <random>

#include "indpoly/decycling.hpp"
#include "indpoly/random.hpp"
#include "oracles.hpp"

using namespace indpoly;

TEST_SUITE("decycling") {

TEST_CASE("fixed decycling numbers") {
    auto phi_of = [](const Graph& g) { return min_decycling(g).phi; };
    CHECK(phi_of(make_path(8)) == 0);
    CHECK(phi_of(Graph(5, {})) == 0);
    CHECK(phi_of(make_cycle(3)) == 1);
    CHECK(phi_of(make_cycle(6)) == 1);
    CHECK(phi_of(disjoint_union(make_cycle(6), make_cycle(6))) == 2);
    CHECK(phi_of(make_complete(4)) == 2);  // K_n needs n-2 deletions
    CHECK(phi_of(make_complete(6)) == 4);
}

TEST_CASE("witness is a minimum decycling set") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(uniform_int(rng, 1, 11), 0.12 + 0.08 * (t % 9), rng);
        DecyclingResult res = min_decycling(g);
        REQUIRE(res.exact);
        CAPTURE(t);
        CHECK(res.phi == test_oracle::phi(g));
        CHECK(static_cast<int>(res.witness.size()) == res.phi);
        CHECK(is_decycling_set(g, res.witness));
    }
}

TEST_CASE("budget cap yields an inexact lower bound") {
    Graph two = disjoint_union(make_cycle(6), make_cycle(6));
    DecyclingResult capped = min_decycling(two, 1);
    CHECK(!capped.exact);
    CHECK(capped.phi == 1);  // means: decycling number exceeds 1
    CHECK(capped.witness.empty());

    DecyclingResult exact = min_decycling(two, 2);
    CHECK(exact.exact);
    CHECK(exact.phi == 2);

    DecyclingResult zero_cap = min_decycling(make_cycle(3), 0);
    CHECK(!zero_cap.exact);
    CHECK_THROWS_AS(min_decycling(two, -1), std::invalid_argument);
}

TEST_CASE("is_decycling_set") {
    Graph c6 = make_cycle(6);
    CHECK(is_decycling_set(c6, std::vector<int>{0}));
    CHECK(is_decycling_set(c6, std::vector<int>{3}));
    CHECK(!is_decycling_set(c6, std::vector<int>{}));
    CHECK(is_decycling_set(make_path(4), std::vector<int>{}));
    CHECK_THROWS_AS(is_decycling_set(c6, std::vector<int>{6}), std::invalid_argument);
}

static void check_is_cycle_of(const Graph& g, const std::vector<int>& cyc) {
    REQUIRE(cyc.size() >= 3);
    for (size_t i = 0; i < cyc.size(); ++i)
        CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
    auto sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("shortest cycle lengths on fixtures") {
    CHECK(!shortest_cycle(make_path(5)).has_value());
    auto c3 = shortest_cycle(make_cycle(3));
    REQUIRE(c3);
    CHECK(c3->size() == 3);
    auto c6 = shortest_cycle(make_cycle(6));
    REQUIRE(c6);
    CHECK(c6->size() == 6);
    check_is_cycle_of(make_cycle(6), *c6);
    CHECK(shortest_cycle(make_complete(5))->size() == 3);
    // hexagon plus a long chord: girth drops to 4
    Graph chord(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
    auto quad = shortest_cycle(chord);
    REQUIRE(quad);
    CHECK(quad->size() == 4);
    check_is_cycle_of(chord, *quad);
}

TEST_CASE("shortest cycle is genuine and matches acyclicity on random graphs") {
    std::mt19937 rng(88);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(uniform_int(rng, 1, 11), unit_real(rng), rng);
        auto cyc = shortest_cycle(g);
        CHECK(cyc.has_value() == !is_acyclic(g));
        if (cyc) check_is_cycle_of(g, *cyc);
    }
}

TEST_CASE("phi certificate checker accepts valid proofs") {
    Graph c6 = make_cycle(6);
    PhiCertificate good{{{0, 1, 2, 3, 4, 5}}, {2}};
    CHECK(check_phi_certificate(c6, good).ok);

    Graph two = disjoint_union(make_cycle(3), make_cycle(3));
    PhiCertificate pair{{{0, 1, 2}, {3, 4, 5}}, {0, 3}};
    CHECK(check_phi_certificate(two, pair).ok);

    PhiCertificate empty;
    CHECK(check_phi_certificate(make_path(4), empty).ok);
}

TEST_CASE("phi certificate checker rejects each defect") {
    Graph two = disjoint_union(make_cycle(3), make_cycle(3));

    // listed cycle uses a missing edge
    CHECK(!check_phi_certificate(two, {{{0, 1, 3}, {2, 4, 5}}, {0, 4}}).ok);
    // cycles share a vertex
    CHECK(!check_phi_certificate(two, {{{0, 1, 2}, {2, 4, 5}}, {0, 4}}).ok);
    Graph c6 = make_cycle(6);
    // repeated vertex inside one cycle
    CHECK(!check_phi_certificate(c6, {{{0, 1, 2, 3, 4, 0}}, {0}}).ok);
    // too short
    CHECK(!check_phi_certificate(c6, {{{0, 1}}, {0}}).ok);
    // out-of-range vertex
    CHECK(!check_phi_certificate(c6, {{{0, 1, 99}}, {0}}).ok);
    // set size does not match the cycle count
    CHECK(!check_phi_certificate(c6, {{{0, 1, 2, 3, 4, 5}}, {0, 3}}).ok);
    // set fails to decycle
    Graph theta(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}});
    CHECK(!check_phi_certificate(theta, {{{0, 1, 2, 3, 4, 5}}, {0}}).ok);
    // repeated vertex in the set
    CHECK(!check_phi_certificate(two, {{{0, 1, 2}, {3, 4, 5}}, {0, 0}}).ok);
    // every rejection carries a reason
    CHECK(!check_phi_certificate(c6, {{{0, 1}}, {0}}).reason.empty());
}

TEST_CASE("many disjoint cycles stay tractable") {
    // 10 hexagons joined into a chain by bridge edges: phi = 10, and the
    // budgets below 10 must be refuted by the packing bound rather than by
    // branching (6^9 states would hang).
    std::vector<Edge> edges;
    for (int b = 0; b < 10; ++b) {
        int base = 6 * b;
        for (int j = 0; j < 6; ++j) edges.emplace_back(base + j, base + (j + 1) % 6);
        if (b > 0) edges.emplace_back(base - 3, base);
    }
    Graph chain(60, edges);
    DecyclingResult res = min_decycling(chain);
    CHECK(res.exact);
    CHECK(res.phi == 10);
    CHECK(is_decycling_set(chain, res.witness));
}

}  // TEST_SUITE
