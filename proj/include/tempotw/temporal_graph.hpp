#pragma once

#include "tempotw/static_graph.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tempotw {

using Time = std::uint32_t;
using Vertex = std::uint32_t;  // 1-based in dynamic graphs
using TimeSet = std::set<Time>;

/// Times plus an arbitrary irreflexive relation `order` read as t1 <_T t2.
struct TimeDomain {
    std::vector<Time> times;                // ascending, distinct
    std::set<std::pair<Time, Time>> order;  // (a, b) means a <_T b
    bool total = false;                     // order is a strict total order

    /// Times with their natural integer order.
    static TimeDomain natural(std::vector<Time> times);

    /// Times 1..tmax with the natural order.
    static TimeDomain range(Time tmax);

    /// Explicit order; `total` is computed.
    static TimeDomain with_order(std::vector<Time> times, std::set<std::pair<Time, Time>> order);

    bool contains(Time t) const;
    std::size_t index_of(Time t) const;
    bool precedes(Time a, Time b) const { return order.contains({a, b}); }

    /// Times listed earliest first. Requires `total`.
    std::vector<Time> linear_order() const;

    bool is_natural() const;

    friend bool operator==(const TimeDomain&, const TimeDomain&) = default;
};

/// Vertex pair; normalised to u < v for undirected graphs.
struct EdgeKey {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

class DynamicGraph {
public:
    DynamicGraph() = default;
    DynamicGraph(std::size_t n, bool directed, TimeDomain time);

    void set_vertex_life(Vertex v, TimeSet life);
    /// Creates the edge if needed and replaces its life. No invariant checks
    /// here; use validate() or load_tgr() for that.
    void set_edge_life(Vertex u, Vertex v, TimeSet life);

    std::size_t vertex_count() const noexcept { return vertex_life_.size(); }
    bool directed() const noexcept { return directed_; }
    const TimeDomain& time() const noexcept { return time_; }

    const TimeSet& vertex_life(Vertex v) const;
    bool alive(Vertex v, Time t) const { return vertex_life(v).contains(t); }

    const std::map<EdgeKey, TimeSet>& edges() const noexcept { return edges_; }
    EdgeKey key(Vertex u, Vertex v) const;
    /// Life of the edge/arc u→v (empty if absent). For undirected graphs the
    /// argument order does not matter.
    const TimeSet& edge_life(Vertex u, Vertex v) const;

    friend bool operator==(const DynamicGraph&, const DynamicGraph&) = default;

private:
    bool directed_ = false;
    TimeDomain time_;
    std::vector<TimeSet> vertex_life_;  // index v-1
    std::map<EdgeKey, TimeSet> edges_;
};

struct Violation {
    enum class Kind { self_loop, dead_endpoint, unknown_time, reflexive_order, not_total, vertex_range };
    Kind kind;
    std::string message;
};

std::vector<Violation> validate(const DynamicGraph& g);

/// Live subgraph at time t, relabelled 0..k-1 in ascending vertex order;
/// `origin` holds the original (1-based) vertex ids.
StaticGraph snapshot(const DynamicGraph& g, Time t);

/// Vertices ever alive, edges ever live; relabelled like snapshot().
StaticGraph union_graph(const DynamicGraph& g);

/// `.tgr` reader: rejects syntax errors (with line numbers) and invariant
/// violations (dead endpoints, self-loops, times outside 1..tmax).
DynamicGraph read_tgr(std::istream& in);
DynamicGraph load_tgr(const std::string& text);
void write_tgr(std::ostream& out, const DynamicGraph& g);
std::string format_tgr(const DynamicGraph& g);

/// `1-3,5` style rendering and parsing of a time set; `-` is the empty set.
std::string format_timeset(const TimeSet& s);
TimeSet parse_timeset(const std::string& text);

}  // namespace tempotw
