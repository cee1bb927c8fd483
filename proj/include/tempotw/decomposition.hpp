#pragma once

#include "tempotw/static_graph.hpp"
#include "tempotw/temporal_graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tempotw {

/// Bags over vertices 0..n-1 of some StaticGraph, joined by tree edges
/// between bag indices.
struct TreeDecomposition {
    using Id = std::uint32_t;

    std::vector<std::vector<Id>> bags;  // each sorted, duplicate-free
    std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
    std::size_t vertex_count = 0;  // size of the decomposed graph

    /// Adds a bag (sorted and deduplicated) and returns its index.
    std::uint32_t add_bag(std::vector<Id> bag);
    void connect(std::uint32_t a, std::uint32_t b) { tree_edges.push_back({a, b}); }

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct DecompositionViolation {
    enum class Kind { not_a_tree, vertex_uncovered, edge_uncovered, trace_disconnected, bad_vertex };
    Kind kind;
    std::string message;
};

/// Empty result means valid: tree-ness, vertex cover, edge cover and
/// connected traces.
std::vector<DecompositionViolation> check_decomposition(const StaticGraph& g, const TreeDecomposition& d);

/// Max bag size minus one; an empty bag list throws, a single empty bag gives -1.
int width(const TreeDecomposition& d);

inline constexpr unsigned default_exact_limit = 18;

struct TreewidthResult {
    int width = -1;
    TreeDecomposition decomposition;
};

/// Exact treewidth by dynamic programming over vertex subsets (elimination
/// orderings). The graph is first split into biconnected blocks; every block
/// must have at most `exact_limit` vertices or Error(limit) is thrown.
TreewidthResult exact_treewidth(const StaticGraph& g, unsigned exact_limit = default_exact_limit);

/// Decomposition from an elimination ordering (vertex ids in elimination order).
TreeDecomposition decomposition_from_ordering(const StaticGraph& g, const std::vector<std::uint32_t>& ordering);

/// Min-fill elimination heuristic, ties broken towards the lowest vertex id.
TreeDecomposition minfill_decomposition(const StaticGraph& g);

/// max over v of tw(G[N_r[v]]) with closed balls; throws Error(limit) naming
/// the vertex whose ball cannot be solved exactly. Empty graph gives -1.
int local_treewidth(const StaticGraph& g, unsigned radius, unsigned exact_limit = default_exact_limit);

/// Decompositions of snapshot(G, t) (in the snapshot's compact ids), keyed by time.
using SnapshotDecompositions = std::map<Time, TreeDecomposition>;

/// Proof construction for the clique-time treewidth-preserving structure:
/// each snapshot bag gains its time element, one bag holds every time element
/// and is joined to the first bag of every snapshot decomposition. The result
/// decomposes gaifman(translate_tw(g, clique)).
TreeDecomposition build_clique_time_decomposition(const DynamicGraph& g, const SnapshotDecompositions& per_snapshot);

/// Proof construction for the linear-time treewidth-preserving structure:
/// the time path s-t1-t2-... is covered by bags {s,t1},{t1},{t1,t2},{t2},...
/// and each {t} bag is joined to the first bag of snapshot t's decomposition.
TreeDecomposition build_linear_time_decomposition(const DynamicGraph& g, const SnapshotDecompositions& per_snapshot);

/// PACE `.td`: `s td <#bags> <max-bag-size> <n>`, `b <id> <v...>`, then `<i> <j>` tree edges; 1-based.
TreeDecomposition read_td(std::istream& in);
TreeDecomposition parse_td(const std::string& text);
void write_td(std::ostream& out, const TreeDecomposition& d);
std::string format_td(const TreeDecomposition& d);

}  // namespace tempotw
