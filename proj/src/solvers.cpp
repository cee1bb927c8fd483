#include "tempotw/solvers.hpp"

#include "tempotw/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace tempotw {

namespace {

void require_vertex(const DynamicGraph& g, Vertex v) {
    if (v < 1 || v > g.vertex_count()) throw Error(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(v));
}

struct Arc {
    Vertex to;
    std::size_t time_index;
};

/// Outgoing time-labelled arcs per vertex (both directions for undirected edges).
std::vector<std::vector<Arc>> arcs(const DynamicGraph& g) {
    std::vector<std::vector<Arc>> out(g.vertex_count() + 1);
    for (const auto& [e, life] : g.edges()) {
        for (Time t : life) {
            const auto ti = g.time().index_of(t);
            out[e.u].push_back({e.v, ti});
            if (!g.directed()) out[e.v].push_back({e.u, ti});
        }
    }
    return out;
}

std::optional<unsigned> shortest_with(const DynamicGraph& g, const std::vector<std::vector<Arc>>& out, const JourneyQuery& q) {
    if (q.source == q.target) return 0u;
    const auto& times = g.time().times;
    const std::size_t nt = times.size();
    // State (vertex, index of last time used); index nt means "no edge used yet".
    std::vector<int> dist((g.vertex_count() + 1) * (nt + 1), -1);
    auto id = [&](Vertex v, std::size_t ti) { return v * (nt + 1) + ti; };
    std::deque<std::pair<Vertex, std::size_t>> queue{{q.source, nt}};
    dist[id(q.source, nt)] = 0;
    while (!queue.empty()) {
        auto [v, last] = queue.front();
        queue.pop_front();
        const int d = dist[id(v, last)];
        if (static_cast<unsigned>(d) >= q.max_length) continue;
        for (const Arc& a : out[v]) {
            if (last != nt && last != a.time_index && !g.time().precedes(times[last], times[a.time_index])) continue;
            if (a.to == q.target) return static_cast<unsigned>(d + 1);
            auto& slot = dist[id(a.to, a.time_index)];
            if (slot == -1) {
                slot = d + 1;
                queue.push_back({a.to, a.time_index});
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<unsigned> shortest_journey(const DynamicGraph& g, const JourneyQuery& q) {
    require_vertex(g, q.source);
    require_vertex(g, q.target);
    return shortest_with(g, arcs(g), q);
}

bool journey_exists(const DynamicGraph& g, const JourneyQuery& q) { return shortest_journey(g, q).has_value(); }

std::optional<std::vector<Vertex>> scdc(const DynamicGraph& g, unsigned k, unsigned ell) {
    if (!g.directed()) throw Error(ErrorKind::invalid_argument, "SCDC is defined on dynamic digraphs");
    if (k == 0) throw Error(ErrorKind::invalid_argument, "SCDC needs k >= 1");
    const auto out = arcs(g);
    std::vector<Vertex> alive;
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (!g.vertex_life(v).empty()) alive.push_back(v);
    const std::size_t n = alive.size();
    std::vector<std::vector<bool>> mutual(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            reach[i][j] = i == j || shortest_with(g, out, {alive[i], alive[j], ell}).has_value();
    std::vector<std::size_t> degree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && reach[i][j] && reach[j][i]) mutual[i][j] = true, ++degree[i];

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return degree[a] > degree[b]; });

    std::vector<std::size_t> best, current;
    // Branch and bound maximum clique over the symmetric relation.
    auto search = [&](auto&& self, std::vector<std::size_t> candidates) -> void {
        if (current.size() > best.size()) best = current;
        for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
            if (current.size() + (candidates.size() - idx) <= best.size()) return;
            const std::size_t c = candidates[idx];
            std::vector<std::size_t> next;
            for (std::size_t j = idx + 1; j < candidates.size(); ++j)
                if (mutual[c][candidates[j]]) next.push_back(candidates[j]);
            current.push_back(c);
            self(self, std::move(next));
            current.pop_back();
        }
    };
    search(search, order);
    if (best.size() < k) return std::nullopt;
    std::vector<Vertex> witness;
    for (auto i : best) witness.push_back(alive[i]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

SmrpReport smrp(const DynamicGraph& g, Vertex v, unsigned k) {
    if (!g.directed()) throw Error(ErrorKind::invalid_argument, "SMRP is defined on dynamic digraphs");
    require_vertex(g, v);
    const auto out = arcs(g);
    SmrpReport report;
    for (const auto& [e, life] : g.edges()) {
        if (e.u != v || life.empty()) continue;
        auto back = shortest_with(g, out, {e.v, v, std::numeric_limits<unsigned>::max()});
        report.returns.push_back({e.v, back});
        if (!back || *back > k) report.ok = false;
    }
    return report;
}

std::optional<std::vector<unsigned>> color_graph(const StaticGraph& g, unsigned k) {
    const std::size_t n = g.vertex_count();
    std::vector<unsigned> color(n, 0);
    if (n == 0) return color;
    if (k == 0) return std::nullopt;
    auto assign = [&](auto&& self, std::size_t v, unsigned used) -> bool {
        if (v == n) return true;
        const unsigned top = std::min(k, used + 1);
        for (unsigned c = 1; c <= top; ++c) {
            bool clash = false;
            for (auto w : g.neighbors(static_cast<StaticGraph::Id>(v)))
                if (w < v && color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[v] = c;
            if (self(self, v + 1, std::max(used, c))) return true;
        }
        color[v] = 0;
        return false;
    };
    if (!assign(assign, 0, 0)) return std::nullopt;
    return color;
}

std::optional<std::vector<unsigned>> permanent_coloring(const DynamicGraph& g, unsigned k) {
    if (g.directed()) throw Error(ErrorKind::invalid_argument, "colouring problems are defined on undirected dynamic graphs");
    if (k == 0) throw Error(ErrorKind::invalid_argument, "colouring needs k >= 1");
    StaticGraph u = union_graph(g);
    auto c = color_graph(u, k);
    if (!c) return std::nullopt;
    std::vector<unsigned> out(g.vertex_count(), 1);
    for (std::size_t i = 0; i < u.vertex_count(); ++i) out[u.origin[i] - 1] = (*c)[i];
    return out;
}

std::optional<std::map<Time, std::vector<unsigned>>> evolving_coloring(const DynamicGraph& g, unsigned k) {
    if (g.directed()) throw Error(ErrorKind::invalid_argument, "colouring problems are defined on undirected dynamic graphs");
    if (k == 0) throw Error(ErrorKind::invalid_argument, "colouring needs k >= 1");
    std::map<Time, std::vector<unsigned>> out;
    for (Time t : g.time().times) {
        StaticGraph snap = snapshot(g, t);
        auto c = color_graph(snap, k);
        if (!c) return std::nullopt;
        std::vector<unsigned> full(g.vertex_count(), 0);
        for (std::size_t i = 0; i < snap.vertex_count(); ++i) full[snap.origin[i] - 1] = (*c)[i];
        out.emplace(t, std::move(full));
    }
    return out;
}

std::string format_scdc_report(const std::optional<std::vector<Vertex>>& witness) {
    std::ostringstream out;
    out << "RESULT " << (witness ? "yes" : "no") << '\n';
    if (witness) {
        out << "WITNESS";
        for (auto v : *witness) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::string format_smrp_report(const SmrpReport& report) {
    std::ostringstream out;
    out << "RESULT " << (report.ok ? "yes" : "no") << '\n';
    for (const auto& [u, len] : report.returns) {
        out << "RETURN " << u << ' ';
        if (len) out << *len;
        else out << "inf";
        out << '\n';
    }
    return out.str();
}

std::string format_permanent_report(const std::optional<std::vector<unsigned>>& colors) {
    std::ostringstream out;
    out << "RESULT " << (colors ? "yes" : "no") << '\n';
    if (colors)
        for (std::size_t i = 0; i < colors->size(); ++i) out << "COLOR " << i + 1 << ' ' << (*colors)[i] << '\n';
    return out.str();
}

std::string format_evolving_report(const std::optional<std::map<Time, std::vector<unsigned>>>& colors) {
    std::ostringstream out;
    out << "RESULT " << (colors ? "yes" : "no") << '\n';
    if (colors) {
        for (const auto& [t, c] : *colors) {
            out << "TIME " << t << '\n';
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i] != 0) out << "COLOR " << i + 1 << ' ' << c[i] << '\n';
        }
    }
    return out.str();
}

}  // namespace tempotw
