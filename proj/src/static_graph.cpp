#include "tempotw/static_graph.hpp"

#include "tempotw/error.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace tempotw {

StaticGraph::StaticGraph(std::size_t n, bool directed) : directed_(directed), adjacency_(n) {}

bool StaticGraph::add_edge(Id u, Id v) {
    if (u >= vertex_count() || v >= vertex_count())
        throw Error(ErrorKind::invalid_argument, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::invariant, "self-loop at vertex " + std::to_string(u + 1));
    Edge key = directed_ ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)};
    if (!edges_.insert(key).second) return false;
    auto link = [](std::vector<Id>& adj, Id w) {
        auto it = std::lower_bound(adj.begin(), adj.end(), w);
        if (it == adj.end() || *it != w) adj.insert(it, w);
    };
    link(adjacency_[u], v);
    link(adjacency_[v], u);
    return true;
}

bool StaticGraph::adjacent(Id u, Id v) const {
    const auto& adj = adjacency_.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

StaticGraph StaticGraph::induced(std::span<const Id> vertices) const {
    StaticGraph sub(vertices.size(), directed_);
    std::vector<std::int64_t> position(vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) position.at(vertices[i]) = static_cast<std::int64_t>(i);
    for (const auto& [u, v] : edges_) {
        if (position[u] >= 0 && position[v] >= 0)
            sub.add_edge(static_cast<Id>(position[u]), static_cast<Id>(position[v]));
    }
    sub.origin.assign(vertices.begin(), vertices.end());
    return sub;
}

std::vector<StaticGraph::Id> StaticGraph::ball(Id v, unsigned radius) const {
    std::vector<unsigned> dist(vertex_count(), ~0u);
    std::deque<Id> queue{v};
    dist.at(v) = 0;
    std::vector<Id> out;
    while (!queue.empty()) {
        Id x = queue.front();
        queue.pop_front();
        out.push_back(x);
        if (dist[x] == radius) continue;
        for (Id y : adjacency_[x]) {
            if (dist[y] == ~0u) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<StaticGraph::Id>> StaticGraph::components() const {
    std::vector<std::vector<Id>> out;
    std::vector<bool> seen(vertex_count(), false);
    for (Id s = 0; s < vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<Id> comp;
        std::vector<Id> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            Id x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (Id y : adjacency_[x]) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

[[noreturn]] void gr_error(std::size_t line, const std::string& msg) {
    throw Error(ErrorKind::syntax, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

StaticGraph read_gr(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0, seen_edges = 0;
    StaticGraph g;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "p") {
            std::string kind;
            if (have_header) gr_error(lineno, "duplicate header");
            if (!(ls >> kind >> n >> m) || kind != "tw") gr_error(lineno, "expected 'p tw <n> <m>'");
            g = StaticGraph(n, false);
            have_header = true;
            continue;
        }
        if (!have_header) gr_error(lineno, "edge before header");
        std::istringstream es(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra)) gr_error(lineno, "expected '<u> <v>'");
        if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
            gr_error(lineno, "vertex out of range");
        if (u == v) gr_error(lineno, "self-loop");
        if (!g.add_edge(static_cast<StaticGraph::Id>(u - 1), static_cast<StaticGraph::Id>(v - 1)))
            gr_error(lineno, "duplicate edge");
        ++seen_edges;
    }
    if (!have_header) throw Error(ErrorKind::syntax, "missing 'p tw' header");
    if (seen_edges != m)
        throw Error(ErrorKind::syntax,
                    "header announces " + std::to_string(m) + " edges, found " + std::to_string(seen_edges));
    return g;
}

StaticGraph parse_gr(const std::string& text) {
    std::istringstream in(text);
    return read_gr(in);
}

void write_gr(std::ostream& out, const StaticGraph& g) {
    out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

std::string format_gr(const StaticGraph& g) {
    std::ostringstream out;
    write_gr(out, g);
    return out.str();
}

}  // namespace tempotw
