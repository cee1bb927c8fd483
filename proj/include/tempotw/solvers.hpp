#pragma once

#include "tempotw/temporal_graph.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tempotw {

struct JourneyQuery {
    Vertex source = 0;
    Vertex target = 0;
    unsigned max_length = 0;
};

/// Fewest edges of a journey (edges used at times t1, t2, ... where each
/// consecutive pair is equal or ordered by <_T) from source to target, or
/// nullopt if none uses at most max_length edges. Undirected edges may be
/// traversed either way.
std::optional<unsigned> shortest_journey(const DynamicGraph& g, const JourneyQuery& q);

bool journey_exists(const DynamicGraph& g, const JourneyQuery& q);

/// Largest set of ever-alive vertices, pairwise joined by journeys of length
/// at most ell in both directions, provided it has at least k members.
/// Directed graphs only.
std::optional<std::vector<Vertex>> scdc(const DynamicGraph& g, unsigned k, unsigned ell);

struct SmrpReport {
    bool ok = true;
    /// Each out-neighbour of v with its shortest return journey (nullopt = none within the search bound).
    std::vector<std::pair<Vertex, std::optional<unsigned>>> returns;
};

/// Every u with an arc (v,u) live at some time has a journey back to v of
/// length at most k. Directed graphs only.
SmrpReport smrp(const DynamicGraph& g, Vertex v, unsigned k);

/// Colour per vertex (index v-1, colours 1..k) that is proper on the union
/// graph; never-alive vertices get colour 1. Undirected graphs only.
std::optional<std::vector<unsigned>> permanent_coloring(const DynamicGraph& g, unsigned k);

/// Independent proper colouring of every snapshot (colours of dead vertices are 0).
std::optional<std::map<Time, std::vector<unsigned>>> evolving_coloring(const DynamicGraph& g, unsigned k);

/// Proper k-colouring of a static graph by backtracking, lowest id first,
/// a new colour only ever being the smallest unused one. Colours are 1..k.
std::optional<std::vector<unsigned>> color_graph(const StaticGraph& g, unsigned k);

// Line reports: RESULT yes|no, then WITNESS / COLOR / TIME / RETURN lines.
std::string format_scdc_report(const std::optional<std::vector<Vertex>>& witness);
std::string format_smrp_report(const SmrpReport& report);
std::string format_permanent_report(const std::optional<std::vector<unsigned>>& colors);
std::string format_evolving_report(const std::optional<std::map<Time, std::vector<unsigned>>>& colors);

}  // namespace tempotw
