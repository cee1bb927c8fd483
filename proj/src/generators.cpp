#include "tempotw/generators.hpp"

#include "tempotw/error.hpp"

#include <algorithm>
#include <sstream>

namespace tempotw {

namespace {

// Stream ids keep the generators' random draws independent of each other.
constexpr std::uint64_t markov_stream = 0x6d61726b6f76ULL;
constexpr std::uint64_t ktree_stream = 0x6b74726565ULL;
constexpr std::uint64_t degree_stream = 0x646567726565ULL;

TimeSet all_times(Time tmax) {
    TimeSet s;
    for (Time t = 1; t <= tmax; ++t) s.insert(t);
    return s;
}

}  // namespace

DynamicGraph gen_edge_markovian(const MarkovParams& params) {
    const double n = static_cast<double>(params.n);
    if (params.n < 1) throw Error(ErrorKind::invalid_argument, "edge-Markovian graph needs n >= 1");
    if (params.tmax < 1) throw Error(ErrorKind::invalid_argument, "edge-Markovian graph needs tmax >= 1");
    if (params.c1 < 0 || params.c1 > n) throw Error(ErrorKind::invalid_argument, "c1 must lie in [0, n]");
    if (params.c2 < 0 || params.c2 > n) throw Error(ErrorKind::invalid_argument, "c2 must lie in [0, n]");
    if (params.initial_density < 0 || params.initial_density > 1)
        throw Error(ErrorKind::invalid_argument, "initial density must lie in [0, 1]");
    const double birth = params.c1 / n;
    const double survive = params.c2 / n;

    DynamicGraph g(params.n, false, TimeDomain::range(params.tmax));
    for (Vertex v = 1; v <= params.n; ++v) g.set_vertex_life(v, all_times(params.tmax));
    std::uint64_t index = 0;
    for (Vertex u = 1; u <= params.n; ++u) {
        for (Vertex v = u + 1; v <= params.n; ++v, ++index) {
            TimeSet life;
            bool present = to_unit(mix_key(params.seed, markov_stream, 1, index)) < params.initial_density;
            if (present) life.insert(1);
            for (Time t = 2; t <= params.tmax; ++t) {
                const double x = to_unit(mix_key(params.seed, markov_stream, t, index));
                present = present ? x < survive : x < birth;
                if (present) life.insert(t);
            }
            if (!life.empty()) g.set_edge_life(u, v, std::move(life));
        }
    }
    return g;
}

double expected_next_degree(double d, std::size_t n, double p, double q) {
    if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be positive");
    if (d < 0 || d > static_cast<double>(n - 1)) throw Error(ErrorKind::invalid_argument, "degree must lie in [0, n-1]");
    if (p < 0 || p > 1 || q < 0 || q > 1) throw Error(ErrorKind::invalid_argument, "p and q must be probabilities");
    return (1 - q) * d + p * (static_cast<double>(n) - 1 - d);
}

std::pair<DynamicGraph, SnapshotDecompositions> gen_snapshot_ktree(std::size_t n, Time tmax, unsigned k, std::uint64_t seed,
                                                                   const KtreeOptions& options) {
    if (k >= n) throw Error(ErrorKind::invalid_argument, "random k-tree needs k < n");
    if (tmax < 1) throw Error(ErrorKind::invalid_argument, "need at least one snapshot");
    if (options.edge_keep < 0 || options.edge_keep > 1 || options.vertex_death < 0 || options.vertex_death > 1)
        throw Error(ErrorKind::invalid_argument, "probabilities must lie in [0, 1]");

    DynamicGraph g(n, false, TimeDomain::range(tmax));
    SnapshotDecompositions witnesses;
    std::vector<TimeSet> vertex_life(n + 1);
    std::map<EdgeKey, TimeSet> edge_life;

    for (Time t = 1; t <= tmax; ++t) {
        Rng rng(seed, ktree_stream ^ t);
        std::vector<Vertex> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i + 1);
        rng.shuffle(perm);

        TreeDecomposition td;  // over original ids for now
        td.add_bag(std::vector<std::uint32_t>(perm.begin(), perm.begin() + k + 1));
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto host = static_cast<std::uint32_t>(rng.below(td.bags.size()));
            std::vector<std::uint32_t> bag = td.bags[host];
            bag.erase(bag.begin() + static_cast<std::ptrdiff_t>(rng.below(bag.size())));
            bag.push_back(perm[i]);
            const auto id = td.add_bag(std::move(bag));
            td.connect(host, id);
        }

        std::vector<bool> alive(n + 1, true);
        for (Vertex v = 1; v <= n; ++v) {
            if (options.vertex_death > 0 && rng.bernoulli(options.vertex_death)) alive[v] = false;
            else vertex_life[v].insert(t);
        }
        std::set<EdgeKey> edges;
        for (const auto& bag : td.bags)
            for (std::size_t a = 0; a < bag.size(); ++a)
                for (std::size_t b = a + 1; b < bag.size(); ++b)
                    edges.insert({std::min(bag[a], bag[b]), std::max(bag[a], bag[b])});
        for (const auto& e : edges)
            if (alive[e.u] && alive[e.v] && rng.bernoulli(options.edge_keep)) edge_life[e].insert(t);

        // Relabel to snapshot ids: live vertices in ascending order.
        std::vector<std::int64_t> compact(n + 1, -1);
        std::uint32_t next = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (alive[v]) compact[v] = next++;
        TreeDecomposition lifted;
        lifted.vertex_count = next;
        for (const auto& bag : td.bags) {
            std::vector<std::uint32_t> kept;
            for (auto v : bag)
                if (compact[v] >= 0) kept.push_back(static_cast<std::uint32_t>(compact[v]));
            lifted.add_bag(std::move(kept));
        }
        lifted.tree_edges = td.tree_edges;
        witnesses.emplace(t, std::move(lifted));
    }
    for (Vertex v = 1; v <= n; ++v) g.set_vertex_life(v, std::move(vertex_life[v]));
    for (auto& [e, life] : edge_life) g.set_edge_life(e.u, e.v, std::move(life));
    return {std::move(g), std::move(witnesses)};
}

DynamicGraph gen_bounded_degree(std::size_t n, Time tmax, unsigned d, std::uint64_t seed) {
    if (tmax < 1) throw Error(ErrorKind::invalid_argument, "need at least one snapshot");
    DynamicGraph g(n, false, TimeDomain::range(tmax));
    for (Vertex v = 1; v <= n; ++v) g.set_vertex_life(v, all_times(tmax));
    std::map<EdgeKey, TimeSet> edge_life;
    std::vector<EdgeKey> pairs;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    for (Time t = 1; t <= tmax; ++t) {
        Rng rng(seed, degree_stream ^ t);
        auto order = pairs;
        rng.shuffle(order);
        std::vector<unsigned> degree(n + 1, 0);
        for (const auto& e : order) {
            if (degree[e.u] >= d || degree[e.v] >= d) continue;
            if (!rng.bernoulli(0.5)) continue;
            ++degree[e.u];
            ++degree[e.v];
            edge_life[e].insert(t);
        }
    }
    for (auto& [e, life] : edge_life) g.set_edge_life(e.u, e.v, std::move(life));
    return g;
}

std::vector<DegreeRow> degree_stats(const DynamicGraph& g) {
    std::vector<DegreeRow> rows;
    for (Time t : g.time().times) {
        StaticGraph snap = snapshot(g, t);
        DegreeRow row{t, 0.0, 0};
        std::size_t total = 0;
        for (StaticGraph::Id v = 0; v < snap.vertex_count(); ++v) {
            const auto deg = snap.neighbors(v).size();
            total += deg;
            row.max_degree = std::max(row.max_degree, deg);
        }
        if (snap.vertex_count() > 0) row.mean_degree = static_cast<double>(total) / static_cast<double>(snap.vertex_count());
        rows.push_back(row);
    }
    return rows;
}

std::string format_degree_stats(const std::vector<DegreeRow>& rows) {
    std::ostringstream out;
    out << "t,mean_degree,max_degree\n";
    out.precision(6);
    for (const auto& r : rows) out << r.t << ',' << std::fixed << r.mean_degree << ',' << r.max_degree << '\n';
    return out.str();
}

}  // namespace tempotw
