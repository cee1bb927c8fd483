// Independent brute-force references for tests. Deliberately naive and kept
// apart from the library's algorithms.
#pragma once

#include "tempotw/static_graph.hpp"
#include "tempotw/temporal_graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <random>
#include <vector>

namespace oracle {

using tempotw::DynamicGraph;
using tempotw::StaticGraph;
using tempotw::Time;
using tempotw::TimeSet;
using tempotw::Vertex;

inline std::vector<std::vector<bool>> adjacency_matrix(const StaticGraph& g) {
    const auto n = g.vertex_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
    return adj;
}

// Treewidth as min over every elimination permutation of the largest
// neighbourhood at elimination time. Factorial; keep n <= 8.
inline int treewidth(const StaticGraph& g) {
    const auto n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = static_cast<int>(n) - 1;
    do {
        auto adj = adjacency_matrix(g);
        std::vector<bool> gone(n, false);
        int worst = 0;
        for (auto v : perm) {
            std::vector<std::size_t> nb;
            for (std::size_t w = 0; w < n; ++w)
                if (!gone[w] && adj[v][w]) nb.push_back(w);
            worst = std::max(worst, static_cast<int>(nb.size()));
            if (worst >= best) break;
            for (auto a : nb)
                for (auto b : nb)
                    if (a != b) adj[a][b] = true;
            gone[v] = true;
        }
        best = std::min(best, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline std::vector<StaticGraph::Id> ball(const StaticGraph& g, StaticGraph::Id v, unsigned r) {
    const auto adj = adjacency_matrix(g);
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<StaticGraph::Id> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
        auto x = q.front();
        q.pop();
        if (dist[x] == static_cast<int>(r)) continue;
        for (StaticGraph::Id y = 0; y < g.vertex_count(); ++y)
            if (adj[x][y] && dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
    }
    std::vector<StaticGraph::Id> out;
    for (StaticGraph::Id y = 0; y < g.vertex_count(); ++y)
        if (dist[y] >= 0) out.push_back(y);
    return out;
}

inline int local_treewidth(const StaticGraph& g, unsigned r) {
    int best = -1;
    for (StaticGraph::Id v = 0; v < g.vertex_count(); ++v) {
        auto b = ball(g, v, r);
        best = std::max(best, treewidth(g.induced(b)));
    }
    return best;
}

// Every labelled walk of at most `max_length` steps, enumerated depth first.
inline bool journey(const DynamicGraph& g, Vertex source, Vertex target, unsigned max_length) {
    if (source == target) return true;
    struct Step {
        Vertex from, to;
        Time t;
    };
    std::vector<Step> steps;
    for (const auto& [e, life] : g.edges())
        for (Time t : life) {
            steps.push_back({e.u, e.v, t});
            if (!g.directed()) steps.push_back({e.v, e.u, t});
        }
    auto ok_after = [&](std::optional<Time> last, Time t) { return !last || *last == t || g.time().precedes(*last, t); };
    auto dfs = [&](auto&& self, Vertex at, std::optional<Time> last, unsigned left) -> bool {
        if (at == target) return true;
        if (left == 0) return false;
        for (const auto& s : steps)
            if (s.from == at && ok_after(last, s.t) && self(self, s.to, s.t, left - 1)) return true;
        return false;
    };
    return dfs(dfs, source, std::nullopt, max_length);
}

inline bool colorable(const StaticGraph& g, unsigned k) {
    const auto n = g.vertex_count();
    if (n == 0) return true;
    if (k == 0) return false;
    std::vector<unsigned> c(n, 0);
    while (true) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (c[u] == c[v]) proper = false;
        if (proper) return true;
        std::size_t i = 0;
        while (i < n && ++c[i] == k) c[i++] = 0;
        if (i == n) return false;
    }
}

inline bool ever_alive(const DynamicGraph& g, Vertex v) { return !g.vertex_life(v).empty(); }

// Size of the largest set of ever-alive vertices joined pairwise both ways
// by journeys of length <= ell; exhaustive over subsets.
inline std::size_t largest_scdc(const DynamicGraph& g, unsigned ell) {
    const auto n = g.vertex_count();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<Vertex> members;
        for (Vertex v = 1; v <= n; ++v)
            if (mask >> (v - 1) & 1) members.push_back(v);
        bool good = true;
        for (auto a : members) good = good && ever_alive(g, a);
        for (auto a : members)
            for (auto b : members)
                if (good && a != b && !journey(g, a, b, ell)) good = false;
        if (good) best = std::max(best, members.size());
    }
    return best;
}

inline bool smrp(const DynamicGraph& g, Vertex v, unsigned k) {
    for (Vertex u = 1; u <= g.vertex_count(); ++u)
        if (u != v && !g.edge_life(v, u).empty() && !journey(g, u, v, k)) return false;
    return true;
}

// Union graph built directly on 1..n (index v-1), never-alive vertices included.
inline StaticGraph union_on_all(const DynamicGraph& g) {
    StaticGraph out(g.vertex_count(), false);
    for (const auto& [e, life] : g.edges())
        if (!life.empty()) out.add_edge(e.u - 1, e.v - 1);
    return out;
}

inline StaticGraph snapshot_on_all(const DynamicGraph& g, Time t) {
    StaticGraph out(g.vertex_count(), false);
    for (const auto& [e, life] : g.edges())
        if (life.contains(t)) out.add_edge(e.u - 1, e.v - 1);
    return out;
}

inline bool permanent(const DynamicGraph& g, unsigned k) { return colorable(union_on_all(g), k); }

inline bool evolving(const DynamicGraph& g, unsigned k) {
    for (Time t : g.time().times)
        if (!colorable(snapshot_on_all(g, t), k)) return false;
    return true;
}

}  // namespace oracle

namespace fixtures {

using namespace tempotw;

inline StaticGraph path(std::size_t n) {
    StaticGraph g(n);
    for (StaticGraph::Id i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline StaticGraph cycle(std::size_t n) {
    StaticGraph g = path(n);
    g.add_edge(static_cast<StaticGraph::Id>(n - 1), 0);
    return g;
}

inline StaticGraph complete(std::size_t n) {
    StaticGraph g(n);
    for (StaticGraph::Id i = 0; i < n; ++i)
        for (StaticGraph::Id j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline StaticGraph grid(std::size_t rows, std::size_t cols) {
    StaticGraph g(rows * cols);
    auto id = [&](std::size_t r, std::size_t c) { return static_cast<StaticGraph::Id>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
        }
    return g;
}

// Random labelled tree by attaching each vertex to an earlier one.
inline StaticGraph random_tree(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    StaticGraph g(n);
    for (StaticGraph::Id v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<StaticGraph::Id>(0, v - 1)(rng));
    return g;
}

inline StaticGraph random_graph(std::size_t n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    StaticGraph g(n);
    for (StaticGraph::Id i = 0; i < n; ++i)
        for (StaticGraph::Id j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline const char* d1_text = "p tgr 3 2 2\nv 1 1-2\nv 2 1-2\nv 3 1-2\ne 1 2 1\ne 2 3 2\n";

inline DynamicGraph d1() { return load_tgr(d1_text); }

// Directed 3-cycle, every arc live at 1..3.
inline DynamicGraph d2(bool drop_31 = false) {
    DynamicGraph g(3, true, TimeDomain::range(3));
    for (Vertex v = 1; v <= 3; ++v) g.set_vertex_life(v, {1, 2, 3});
    g.set_edge_life(1, 2, {1, 2, 3});
    g.set_edge_life(2, 3, {1, 2, 3});
    if (!drop_31) g.set_edge_life(3, 1, {1, 2, 3});
    return g;
}

// Triangle whose edges live at different times: 12@1, 23@2, 13@3.
inline DynamicGraph spread_triangle() {
    DynamicGraph g(3, false, TimeDomain::range(3));
    for (Vertex v = 1; v <= 3; ++v) g.set_vertex_life(v, {1, 2, 3});
    g.set_edge_life(1, 2, {1});
    g.set_edge_life(2, 3, {2});
    g.set_edge_life(1, 3, {3});
    return g;
}

// Random valid dynamic graph: vertex lives with probability `alive`, edges
// only at times both endpoints live.
inline DynamicGraph random_dynamic(std::size_t n, Time tmax, bool directed, double density, unsigned seed,
                                   double alive = 0.85) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution live(alive), edge(density);
    DynamicGraph g(n, directed, TimeDomain::range(tmax));
    for (Vertex v = 1; v <= n; ++v) {
        TimeSet life;
        for (Time t = 1; t <= tmax; ++t)
            if (live(rng)) life.insert(t);
        g.set_vertex_life(v, life);
    }
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v) {
            if (u == v || (!directed && v < u)) continue;
            TimeSet life;
            for (Time t = 1; t <= tmax; ++t)
                if (g.alive(u, t) && g.alive(v, t) && edge(rng)) life.insert(t);
            if (!life.empty()) g.set_edge_life(u, v, life);
        }
    return g;
}

}  // namespace fixtures
