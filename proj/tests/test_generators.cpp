#include "oracles.hpp"

#include "tempotw/decomposition.hpp"
#include "tempotw/error.hpp"
#include "tempotw/generators.hpp"
#include "tempotw/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace tempotw;

TEST_CASE("expected next degree") {
    CHECK(expected_next_degree(5, 10, 0.2, 0.9) == doctest::Approx(0.1 * 5 + 0.2 * 4));
    for (int d = 0; d <= 9; ++d) CHECK(expected_next_degree(d, 10, 0.0, 1.0) == 0.0);
    const double n = 40, c1 = 3, c2 = 2;
    for (int d = 0; d < 40; ++d) CHECK(expected_next_degree(d, 40, c1 / n, 1 - c2 / n) <= c1 + c2 + 1e-12);
    CHECK_THROWS_AS(expected_next_degree(10, 10, 0.1, 0.1), Error);
    CHECK_THROWS_AS(expected_next_degree(-1, 10, 0.1, 0.1), Error);
    CHECK_THROWS_AS(expected_next_degree(1, 10, 1.5, 0.1), Error);
}

TEST_CASE("edge-Markovian corner cases") {
    MarkovParams p;
    p.n = 12;
    p.tmax = 6;
    p.seed = 5;
    p.c1 = 0;
    p.c2 = 6;
    auto still = gen_edge_markovian(p);
    CHECK(still.edges().empty());
    for (Vertex v = 1; v <= 12; ++v) CHECK(still.vertex_life(v).size() == 6);
    CHECK(validate(still).empty());

    // No survival: every edge present at t is gone at t+1.
    p.c1 = 4;
    p.c2 = 0;
    p.initial_density = 1;
    auto flicker = gen_edge_markovian(p);
    CHECK(snapshot(flicker, 1).edge_count() == 66);
    CHECK(snapshot(flicker, 2).edge_count() == 0);
    for (const auto& [e, life] : flicker.edges())
        for (Time t : life) CHECK_FALSE(life.contains(t + 1));

    p.c1 = 13;
    CHECK_THROWS_AS(gen_edge_markovian(p), Error);
    p.c1 = -1;
    CHECK_THROWS_AS(gen_edge_markovian(p), Error);
}

TEST_CASE("generators are reproducible") {
    MarkovParams p{30, 20, 2, 1, 99, 0.1};
    CHECK(gen_edge_markovian(p) == gen_edge_markovian(p));
    CHECK(format_tgr(gen_edge_markovian(p)) == format_tgr(gen_edge_markovian(p)));
    auto other = p;
    other.seed = 100;
    CHECK_FALSE(gen_edge_markovian(p) == gen_edge_markovian(other));
    CHECK(gen_snapshot_ktree(9, 4, 2, 3).first == gen_snapshot_ktree(9, 4, 2, 3).first);
    CHECK(gen_bounded_degree(15, 4, 3, 8) == gen_bounded_degree(15, 4, 3, 8));
}

TEST_CASE("one-step Markov law on a small graph") {
    // Pool transitions over many seeds; compare against the recurrence per starting degree.
    const std::size_t n = 20;
    const double c1 = 2, c2 = 3;
    const double p = c1 / n, q = 1 - c2 / n;
    std::map<int, std::vector<double>> next_by_degree;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        MarkovParams params{n, 15, c1, c2, seed, 0.3};
        auto rows = gen_edge_markovian(params);
        for (Time t = 1; t < 15; ++t) {
            auto a = snapshot(rows, t), b = snapshot(rows, t + 1);
            for (StaticGraph::Id v = 0; v < n; ++v)
                next_by_degree[static_cast<int>(a.neighbors(v).size())].push_back(static_cast<double>(b.neighbors(v).size()));
        }
    }
    int tested = 0;
    for (auto& [d, xs] : next_by_degree) {
        if (xs.size() < 200) continue;
        double mean = 0, var = 0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        for (double x : xs) var += (x - mean) * (x - mean);
        var /= static_cast<double>(xs.size() - 1);
        const double se = std::sqrt(var / static_cast<double>(xs.size()));
        CAPTURE(d);
        CHECK(std::abs(mean - expected_next_degree(d, n, p, q)) <= 5 * se + 1e-9);
        ++tested;
    }
    CHECK(tested >= 3);
}

TEST_CASE("random partial k-trees") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        const unsigned k = 1 + seed % 3;
        KtreeOptions options;
        options.vertex_death = seed % 2 ? 0.2 : 0.0;
        auto [g, witnesses] = gen_snapshot_ktree(7, 3, k, seed, options);
        CHECK(validate(g).empty());
        REQUIRE(witnesses.size() == 3);
        for (Time t : g.time().times) {
            auto snap = snapshot(g, t);
            CHECK(check_decomposition(snap, witnesses.at(t)).empty());
            CHECK(width(witnesses.at(t)) <= static_cast<int>(k));
            CHECK(oracle::treewidth(snap) <= static_cast<int>(k));
        }
    }
}

TEST_CASE("k-tree extremes") {
    auto [forest, w1] = gen_snapshot_ktree(8, 3, 1, 4);
    for (Time t : forest.time().times) {
        auto s = snapshot(forest, t);
        CHECK(exact_treewidth(s).width <= 1);
        CHECK(s.edge_count() < s.vertex_count());
    }
    KtreeOptions keep_all;
    keep_all.edge_keep = 1.0;
    auto [full, wn] = gen_snapshot_ktree(6, 2, 5, 4, keep_all);
    CHECK(snapshot(full, 1) == fixtures::complete(6));
    CHECK(width(wn.at(1)) == 5);
    CHECK_THROWS_AS(gen_snapshot_ktree(3, 1, 3, 1), Error);
}

TEST_CASE("bounded degree snapshots") {
    CHECK(gen_bounded_degree(10, 3, 0, 1).edges().empty());
    for (unsigned seed = 0; seed < 10; ++seed) {
        for (unsigned d = 1; d <= 3; ++d) {
            auto g = gen_bounded_degree(14, 3, d, seed);
            CHECK(validate(g).empty());
            for (const auto& row : degree_stats(g)) CHECK(row.max_degree <= d);
            for (unsigned r = 1; r <= 2; ++r) {
                auto snap = snapshot(g, 1 + seed % 3);
                CHECK(local_treewidth(snap, r) <= static_cast<int>(std::pow(d, r)));
            }
        }
        auto paths = gen_bounded_degree(12, 2, 2, seed);
        for (Time t : paths.time().times) {
            auto s = snapshot(paths, t);
            CHECK(local_treewidth(s, 2) <= 2);
            // paths and cycles: each component has at most as many edges as vertices
            for (auto& comp : s.components()) CHECK(s.induced(comp).edge_count() <= comp.size());
        }
    }
}

TEST_CASE("degree statistics") {
    auto rows = degree_stats(fixtures::d1());
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].max_degree == 1);
    CHECK(rows[1].max_degree == 1);
    CHECK(rows[0].mean_degree == doctest::Approx(2.0 / 3.0));
    CHECK(format_degree_stats(rows) == "t,mean_degree,max_degree\n1,0.666667,1\n2,0.666667,1\n");
}

TEST_CASE("verify runs every theorem and reports per-trial data") {
    for (auto th : {Theorem::tw_bound, Theorem::linear_bound, Theorem::ltw_bound, Theorem::markov_degree}) {
        auto report = verify(th, th == Theorem::markov_degree ? 3 : 15, 7);
        CHECK(report.ok());
        CHECK(report.trials.size() == (th == Theorem::markov_degree ? 3u : 15u));
        for (const auto& t : report.trials) CHECK_FALSE(t.checks.empty());
        CHECK(parse_theorem(theorem_name(th)) == th);
    }
    CHECK(format_verify_report(verify(Theorem::linear_bound, 2, 1)) == format_verify_report(verify(Theorem::linear_bound, 2, 1)));
    CHECK(trial_seed(1, Theorem::tw_bound, 0) != trial_seed(1, Theorem::tw_bound, 1));
    CHECK_THROWS_AS(parse_theorem("nope"), Error);
}
