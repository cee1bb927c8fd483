#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tempotw {

/// Plain (di)graph on vertices 0..n-1. Used for snapshots, union graphs and
/// Gaifman graphs; `origin` remembers where each vertex came from (original
/// vertex id for snapshots, universe element index for Gaifman graphs).
class StaticGraph {
public:
    using Id = std::uint32_t;
    using Edge = std::pair<Id, Id>;

    explicit StaticGraph(std::size_t n = 0, bool directed = false);

    /// Returns false if the edge was already present. Self-loops and
    /// out-of-range endpoints throw.
    bool add_edge(Id u, Id v);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool directed() const noexcept { return directed_; }

    /// Edges as stored: ordered pairs when directed, (min,max) otherwise.
    const std::set<Edge>& edges() const noexcept { return edges_; }

    /// Undirected neighbourhood, sorted; for digraphs this is the underlying graph.
    std::span<const Id> neighbors(Id v) const { return adjacency_.at(v); }

    bool adjacent(Id u, Id v) const;

    /// Subgraph induced on `vertices` (relabelled in the given order);
    /// origin of the result maps back to ids of this graph.
    StaticGraph induced(std::span<const Id> vertices) const;

    /// Closed ball of the given radius around v, in ascending id order.
    std::vector<Id> ball(Id v, unsigned radius) const;

    /// Connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<Id>> components() const;

    std::vector<std::uint32_t> origin;

    friend bool operator==(const StaticGraph& a, const StaticGraph& b) {
        return a.directed_ == b.directed_ && a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
    }

private:
    bool directed_;
    std::set<Edge> edges_;
    std::vector<std::vector<Id>> adjacency_;
};

/// PACE `.gr`: `p tw <n> <m>` then one `<u> <v>` line per edge, 1-based,
/// `c` lines are comments.
StaticGraph read_gr(std::istream& in);
StaticGraph parse_gr(const std::string& text);
void write_gr(std::ostream& out, const StaticGraph& g);
std::string format_gr(const StaticGraph& g);

}  // namespace tempotw
