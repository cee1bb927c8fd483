#pragma once

#include "tempotw/decomposition.hpp"
#include "tempotw/temporal_graph.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tempotw {

/// Edge-Markovian dynamic graph: every vertex always alive; between
/// consecutive snapshots an absent edge appears with p = c1/n and a present
/// edge survives with 1-q = c2/n.
struct MarkovParams {
    std::size_t n = 0;
    Time tmax = 0;
    double c1 = 0;
    double c2 = 0;
    std::uint64_t seed = 0;
    double initial_density = 0;  // 0 = empty first snapshot
};

DynamicGraph gen_edge_markovian(const MarkovParams& params);

/// (1-q)·d + p·(n-1-d): expected degree after one step from degree d.
double expected_next_degree(double d, std::size_t n, double p, double q);

struct KtreeOptions {
    double edge_keep = 0.7;    // chance a k-tree edge survives the thinning step
    double vertex_death = 0.0; // chance a vertex is dead in a given snapshot
};

/// Every snapshot is an independent random partial k-tree; the returned
/// decompositions (in snapshot ids) certify tw(G_t) <= k.
std::pair<DynamicGraph, SnapshotDecompositions> gen_snapshot_ktree(std::size_t n, Time tmax, unsigned k, std::uint64_t seed,
                                                                   const KtreeOptions& options = {});

/// Snapshots with maximum degree <= d (random pair order, edge kept when
/// both endpoints still have room and a fair coin agrees).
DynamicGraph gen_bounded_degree(std::size_t n, Time tmax, unsigned d, std::uint64_t seed);

struct DegreeRow {
    Time t = 0;
    double mean_degree = 0;
    std::size_t max_degree = 0;
};

/// Mean and maximum degree of the live vertices of each snapshot
/// (underlying undirected degree for digraphs).
std::vector<DegreeRow> degree_stats(const DynamicGraph& g);

/// `t,mean_degree,max_degree` CSV.
std::string format_degree_stats(const std::vector<DegreeRow>& rows);

}  // namespace tempotw
