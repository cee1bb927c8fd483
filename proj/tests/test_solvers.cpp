#include "oracles.hpp"

#include "tempotw/error.hpp"
#include "tempotw/solvers.hpp"

#include <doctest.h>

using namespace tempotw;

namespace {

bool proper(const StaticGraph& g, const std::vector<unsigned>& colors, unsigned k) {
    for (auto c : colors)
        if (c < 1 || c > k) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

}  // namespace

TEST_CASE("journeys on D1") {
    auto g = fixtures::d1();
    CHECK(journey_exists(g, {1, 3, 2}));
    CHECK(shortest_journey(g, {1, 3, 2}) == 2u);
    CHECK_FALSE(journey_exists(g, {1, 3, 1}));
    CHECK_FALSE(journey_exists(g, {3, 1, 3}));
    CHECK(journey_exists(g, {3, 3, 0}));
    CHECK(shortest_journey(g, {2, 2, 0}) == 0u);
    CHECK_THROWS_AS(journey_exists(g, {0, 1, 1}), Error);
    CHECK_THROWS_AS(journey_exists(g, {1, 4, 1}), Error);
}

TEST_CASE("several edges may share one time") {
    auto g = load_tgr("p tgr 3 2 1\nv 1 1\nv 2 1\nv 3 1\na 1 2 1\na 2 3 1\n");
    CHECK(shortest_journey(g, {1, 3, 5}) == 2u);
    CHECK_FALSE(journey_exists(g, {3, 1, 5}));
}

TEST_CASE("journeys agree with walk enumeration") {
    for (unsigned seed = 0; seed < 80; ++seed) {
        auto g = fixtures::random_dynamic(5, 1 + seed % 4, seed % 2 == 0, 0.3, seed, 0.9);
        for (Vertex a = 1; a <= 5; ++a)
            for (Vertex b = 1; b <= 5; ++b)
                for (unsigned n = 0; n <= 4; ++n) CHECK(journey_exists(g, {a, b, n}) == oracle::journey(g, a, b, n));
    }
}

TEST_CASE("journey existence is monotone in the budget and in liveness") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        auto g = fixtures::random_dynamic(5, 3, true, 0.25, seed, 1.0);
        auto grown = g;
        for (const auto& [e, life] : g.edges()) {
            auto more = life;
            more.insert(1 + seed % 3);
            grown.set_edge_life(e.u, e.v, more);
        }
        for (Vertex a = 1; a <= 5; ++a)
            for (Vertex b = 1; b <= 5; ++b)
                for (unsigned n = 0; n < 4; ++n) {
                    if (journey_exists(g, {a, b, n})) {
                        CHECK(journey_exists(g, {a, b, n + 1}));
                        CHECK(journey_exists(grown, {a, b, n}));
                    }
                }
    }
}

TEST_CASE("SCDC") {
    auto d2 = fixtures::d2();
    CHECK(scdc(d2, 3, 2) == std::vector<Vertex>{1, 2, 3});
    CHECK_FALSE(scdc(d2, 3, 1).has_value());
    CHECK_FALSE(scdc(fixtures::d2(true), 2, 3).has_value());
    auto single = scdc(fixtures::d2(true), 1, 1);
    REQUIRE(single.has_value());
    CHECK(single->size() == 1);
    CHECK_THROWS_AS(scdc(fixtures::d1(), 1, 1), Error);
    DynamicGraph dead(2, true, TimeDomain::range(1));
    CHECK_FALSE(scdc(dead, 1, 1).has_value());
}

TEST_CASE("SCDC agrees with subset enumeration and its witnesses check out") {
    for (unsigned seed = 0; seed < 60; ++seed) {
        auto g = fixtures::random_dynamic(5, 1 + seed % 3, true, 0.45, seed);
        for (unsigned ell = 1; ell <= 3; ++ell) {
            const auto best = oracle::largest_scdc(g, ell);
            for (unsigned k = 1; k <= 5; ++k) {
                auto w = scdc(g, k, ell);
                CHECK(w.has_value() == (best >= k));
                if (!w) continue;
                CHECK(w->size() == best);
                for (auto a : *w)
                    for (auto b : *w) CHECK(oracle::journey(g, a, b, ell));
            }
        }
    }
}

TEST_CASE("SMRP") {
    auto two = load_tgr("p tgr 2 2 2\nv 1 1-2\nv 2 1-2\na 1 2 1\na 2 1 2\n");
    CHECK(smrp(two, 1, 1).ok);
    auto three = load_tgr("p tgr 3 3 3\nv 1 1-3\nv 2 1-3\nv 3 1-3\na 1 2 1\na 2 3 2\na 3 1 3\n");
    auto one = smrp(three, 1, 1);
    CHECK_FALSE(one.ok);
    REQUIRE(one.returns.size() == 1);
    CHECK(one.returns[0].first == 2);
    CHECK(one.returns[0].second == 2u);
    CHECK(smrp(three, 1, 2).ok);
    auto sink = load_tgr("p tgr 2 1 1\nv 1 1\nv 2 1\na 2 1 1\n");
    CHECK(smrp(sink, 1, 0).ok);
    CHECK(smrp(sink, 1, 0).returns.empty());
    auto none = smrp(sink, 2, 3);
    CHECK_FALSE(none.ok);
    CHECK_FALSE(none.returns.at(0).second.has_value());
    CHECK(format_smrp_report(none) == "RESULT no\nRETURN 1 inf\n");
    CHECK_THROWS_AS(smrp(sink, 3, 1), Error);
    CHECK_THROWS_AS(smrp(fixtures::d1(), 1, 1), Error);
}

TEST_CASE("SMRP agrees with the walk oracle") {
    for (unsigned seed = 0; seed < 60; ++seed) {
        auto g = fixtures::random_dynamic(5, 1 + seed % 3, true, 0.3, seed);
        for (Vertex v = 1; v <= 5; ++v)
            for (unsigned k = 0; k <= 3; ++k) CHECK(smrp(g, v, k).ok == oracle::smrp(g, v, k));
    }
}

TEST_CASE("colourings of the reference instances") {
    auto d1 = fixtures::d1();
    auto perm = permanent_coloring(d1, 2);
    REQUIRE(perm.has_value());
    CHECK(*perm == std::vector<unsigned>{1, 2, 1});
    CHECK(evolving_coloring(d1, 2).has_value());
    CHECK(format_permanent_report(perm) == "RESULT yes\nCOLOR 1 1\nCOLOR 2 2\nCOLOR 3 1\n");

    auto tri = fixtures::spread_triangle();
    CHECK_FALSE(permanent_coloring(tri, 2).has_value());
    auto evo = evolving_coloring(tri, 2);
    REQUIRE(evo.has_value());
    CHECK(evo->size() == 3);
    CHECK(format_permanent_report(std::nullopt) == "RESULT no\n");

    DynamicGraph edgeless(3, false, TimeDomain::range(2));
    for (Vertex v = 1; v <= 3; ++v) edgeless.set_vertex_life(v, {1});
    CHECK(permanent_coloring(edgeless, 1).has_value());
    CHECK(evolving_coloring(edgeless, 1).has_value());
    CHECK((*evolving_coloring(edgeless, 1))[2] == std::vector<unsigned>{0, 0, 0});

    CHECK_FALSE(permanent_coloring(d1, 1).has_value());
    CHECK_FALSE(evolving_coloring(d1, 1).has_value());
    CHECK_THROWS_AS(permanent_coloring(fixtures::d2(), 2), Error);
}

TEST_CASE("colourings agree with brute force and are proper") {
    for (unsigned seed = 0; seed < 80; ++seed) {
        auto g = fixtures::random_dynamic(6, 1 + seed % 3, false, 0.45, seed);
        for (unsigned k = 1; k <= 4; ++k) {
            auto perm = permanent_coloring(g, k);
            auto evo = evolving_coloring(g, k);
            CHECK(perm.has_value() == oracle::permanent(g, k));
            CHECK(evo.has_value() == oracle::evolving(g, k));
            if (perm) {
                CHECK(evo.has_value());
                CHECK(proper(oracle::union_on_all(g), *perm, k));
            }
            if (evo)
                for (Time t : g.time().times) {
                    auto s = snapshot(g, t);
                    std::vector<unsigned> live;
                    for (auto o : s.origin) live.push_back((*evo)[t][o - 1]);
                    CHECK(proper(s, live, k));
                }
        }
    }
}

TEST_CASE("static colouring search") {
    CHECK(color_graph(fixtures::cycle(5), 2) == std::nullopt);
    CHECK(color_graph(fixtures::cycle(5), 3).has_value());
    CHECK(color_graph(fixtures::complete(4), 4) == std::vector<unsigned>{1, 2, 3, 4});
    CHECK(color_graph(StaticGraph(0), 0).has_value());
    CHECK_FALSE(color_graph(StaticGraph(1), 0).has_value());
}

TEST_CASE("report formats") {
    CHECK(format_scdc_report(std::vector<Vertex>{1, 3}) == "RESULT yes\nWITNESS 1 3\n");
    CHECK(format_scdc_report(std::nullopt) == "RESULT no\n");
    std::map<Time, std::vector<unsigned>> evo{{1, {1, 2}}, {2, {0, 1}}};
    CHECK(format_evolving_report(evo) == "RESULT yes\nTIME 1\nCOLOR 1 1\nCOLOR 2 2\nTIME 2\nCOLOR 2 1\n");
}
