#include "oracles.hpp"

#include "tempotw/error.hpp"
#include "tempotw/temporal_graph.hpp"

#include <doctest.h>

using namespace tempotw;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::evaluation;
}

std::string message_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    FAIL("expected an error");
    return {};
}

}  // namespace

TEST_CASE("D1 loads as written") {
    auto g = fixtures::d1();
    CHECK(g.vertex_count() == 3);
    CHECK_FALSE(g.directed());
    CHECK(g.time().times == std::vector<Time>{1, 2});
    CHECK(g.time().total);
    CHECK(g.edge_life(1, 2) == TimeSet{1});
    CHECK(g.edge_life(2, 1) == TimeSet{1});
    CHECK(g.edge_life(2, 3) == TimeSet{2});
    CHECK(g.edge_life(1, 3).empty());
    CHECK(validate(g).empty());
}

TEST_CASE("single vertex graph") {
    auto g = load_tgr("p tgr 1 0 1\nv 1 1\n");
    CHECK(g.vertex_count() == 1);
    CHECK(g.vertex_life(1) == TimeSet{1});
    CHECK(g.edges().empty());
}

TEST_CASE("edge at a time its endpoint is dead is rejected") {
    const char* text = "p tgr 2 1 2\nv 1 1\nv 2 1-2\ne 1 2 2\n";
    CHECK(kind_of([&] { load_tgr(text); }) == ErrorKind::invariant);
    CHECK(message_of([&] { load_tgr(text); }).find("edge 1 2 live at t=2 but vertex 1 dead") != std::string::npos);
}

TEST_CASE("reader diagnostics") {
    SUBCASE("self-loop") { CHECK(kind_of([] { load_tgr("p tgr 2 1 1\nv 1 1\ne 1 1 1\n"); }) == ErrorKind::invariant); }
    SUBCASE("time out of range") { CHECK(kind_of([] { load_tgr("p tgr 1 0 2\nv 1 3\n"); }) == ErrorKind::invariant); }
    SUBCASE("reflexive order pair") {
        CHECK(kind_of([] { load_tgr("p tgr 1 0 2\nv 1 1\no 1 1\n"); }) == ErrorKind::invariant);
    }
    SUBCASE("missing header") { CHECK(kind_of([] { load_tgr("v 1 1\n"); }) == ErrorKind::syntax); }
    SUBCASE("bad timeset reports the line") {
        auto msg = message_of([] { load_tgr("p tgr 1 0 2\nc comment\nv 1 x\n"); });
        CHECK(msg.find("3") != std::string::npos);
    }
    SUBCASE("edge count mismatch") { CHECK(kind_of([] { load_tgr("p tgr 2 2 1\nv 1 1\nv 2 1\ne 1 2 1\n"); }) == ErrorKind::syntax); }
    SUBCASE("unknown vertex") { CHECK_THROWS_AS(load_tgr("p tgr 2 1 1\nv 1 1\ne 1 3 1\n"), Error); }
}

TEST_CASE("missing v line means never alive; comments ignored") {
    auto g = load_tgr("c hello\np tgr 3 1 2\nv 1 1-2\nv 2 2\ne 1 2 2\n");
    CHECK(g.vertex_life(3).empty());
    CHECK(snapshot(g, 1).vertex_count() == 1);
    CHECK(union_graph(g).vertex_count() == 2);
}

TEST_CASE("directed arcs and explicit orders") {
    auto g = load_tgr("p tgr 2 2 3\nv 1 1-3\nv 2 1-3\na 1 2 1\na 2 1 3\no 3 1\no 1 2\n");
    CHECK(g.directed());
    CHECK(g.edge_life(1, 2) == TimeSet{1});
    CHECK(g.edge_life(2, 1) == TimeSet{3});
    CHECK(g.time().precedes(3, 1));
    CHECK_FALSE(g.time().precedes(1, 3));
    CHECK_FALSE(g.time().total);
    CHECK_THROWS_AS(g.time().linear_order(), Error);
}

TEST_CASE("a custom total order is recognised") {
    auto t = TimeDomain::with_order({1, 2, 3}, {{3, 1}, {3, 2}, {1, 2}});
    CHECK(t.total);
    CHECK(t.linear_order() == std::vector<Time>{3, 1, 2});
    CHECK_FALSE(t.is_natural());
    auto partial = TimeDomain::with_order({1, 2, 3}, {{1, 2}, {2, 3}});
    CHECK_FALSE(partial.total);  // not transitive
}

TEST_CASE("snapshots of D1") {
    auto g = fixtures::d1();
    auto s1 = snapshot(g, 1);
    CHECK(s1.vertex_count() == 3);
    CHECK(s1.edges() == std::set<StaticGraph::Edge>{{0, 1}});
    CHECK(s1.origin == std::vector<std::uint32_t>{1, 2, 3});
    auto s2 = snapshot(g, 2);
    CHECK(s2.edges() == std::set<StaticGraph::Edge>{{1, 2}});
    CHECK_THROWS_AS(snapshot(g, 3), Error);
}

TEST_CASE("snapshot drops dead vertices and keeps origins") {
    DynamicGraph g(3, false, TimeDomain::range(2));
    g.set_vertex_life(1, {1, 2});
    g.set_vertex_life(2, {1, 2});
    g.set_vertex_life(3, {1});
    g.set_edge_life(2, 3, {1});
    auto s = snapshot(g, 2);
    CHECK(s.vertex_count() == 2);
    CHECK(s.origin == std::vector<std::uint32_t>{1, 2});
    CHECK(s.edge_count() == 0);
}

TEST_CASE("union graphs") {
    CHECK(union_graph(fixtures::d1()).edges() == std::set<StaticGraph::Edge>{{0, 1}, {1, 2}});
    CHECK(union_graph(fixtures::spread_triangle()) == fixtures::complete(3));
    DynamicGraph empty(4, false, TimeDomain::range(2));
    for (Vertex v = 1; v <= 4; ++v) empty.set_vertex_life(v, {1});
    auto u = union_graph(empty);
    CHECK(u.vertex_count() == 4);
    CHECK(u.edge_count() == 0);
}

TEST_CASE("validate reports each violation") {
    DynamicGraph g(2, false, TimeDomain::range(2));
    g.set_vertex_life(1, {1});
    g.set_vertex_life(2, {1, 2});
    g.set_edge_life(1, 2, {2});
    auto v = validate(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::dead_endpoint);

    DynamicGraph h(1, false, TimeDomain::with_order({1, 2}, {{1, 1}, {1, 2}}));
    h.set_vertex_life(1, {1});
    auto w = validate(h);
    REQUIRE(w.size() == 1);
    CHECK(w[0].kind == Violation::Kind::reflexive_order);

    DynamicGraph loop(1, true, TimeDomain::range(1));
    loop.set_vertex_life(1, {1});
    loop.set_edge_life(1, 1, {1});
    CHECK(validate(loop).at(0).kind == Violation::Kind::self_loop);
}

TEST_CASE("timeset text") {
    CHECK(format_timeset({1, 2, 3, 5}) == "1-3,5");
    CHECK(format_timeset({}) == "-");
    CHECK(parse_timeset("1-3,5") == TimeSet{1, 2, 3, 5});
    CHECK(parse_timeset("-").empty());
    CHECK_THROWS_AS(parse_timeset("3-1"), Error);
    CHECK_THROWS_AS(parse_timeset("1,,2"), Error);
}

TEST_CASE("snapshots and union agree on random graphs") {
    for (unsigned seed = 0; seed < 40; ++seed) {
        auto g = fixtures::random_dynamic(5, 3, seed % 2 == 0, 0.4, seed);
        REQUIRE(validate(g).empty());
        auto u = union_graph(g);
        std::set<std::pair<Vertex, Vertex>> lifted_union, lifted_snaps;
        for (auto [a, b] : u.edges()) lifted_union.insert({u.origin[a], u.origin[b]});
        std::set<Vertex> union_vertices(u.origin.begin(), u.origin.end());
        for (Time t : g.time().times) {
            auto s = snapshot(g, t);
            for (auto o : s.origin) CHECK(union_vertices.contains(o));
            for (auto [a, b] : s.edges()) lifted_snaps.insert({s.origin[a], s.origin[b]});
        }
        CHECK(lifted_snaps == lifted_union);
    }
}

TEST_CASE("tgr write then read reproduces the graph") {
    for (unsigned seed = 0; seed < 20; ++seed) {
        auto g = fixtures::random_dynamic(6, 4, seed % 2 == 1, 0.3, seed);
        CHECK(load_tgr(format_tgr(g)) == g);
    }
    auto ordered = load_tgr("p tgr 2 1 3\nv 1 1-3\nv 2 1-3\na 1 2 1\no 3 1\no 1 2\no 3 2\n");
    CHECK(load_tgr(format_tgr(ordered)) == ordered);
}

TEST_CASE("static graph basics") {
    StaticGraph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK_THROWS_AS(g.add_edge(2, 2), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    CHECK(g.adjacent(1, 0));
    CHECK(g.components().size() == 2);
    CHECK(fixtures::cycle(8).ball(0, 2) == std::vector<StaticGraph::Id>{0, 1, 2, 6, 7});
    CHECK(fixtures::path(4).ball(0, 0) == std::vector<StaticGraph::Id>{0});
}

TEST_CASE("gr format") {
    auto g = parse_gr("c comment\np tw 4 3\n1 2\n2 3\n3 4\n");
    CHECK(g == fixtures::path(4));
    CHECK(parse_gr(format_gr(fixtures::grid(3, 3))) == fixtures::grid(3, 3));
    CHECK(kind_of([] { parse_gr("p tw 2 1\n1 3\n"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_gr("p tw 2 2\n1 2\n"); }) == ErrorKind::syntax);
    CHECK(kind_of([] { parse_gr("1 2\n"); }) == ErrorKind::syntax);
}
