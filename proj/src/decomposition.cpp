#include "tempotw/decomposition.hpp"

#include "tempotw/error.hpp"
#include "tempotw/structures.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace tempotw {

std::uint32_t TreeDecomposition::add_bag(std::vector<Id> bag) {
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    bags.push_back(std::move(bag));
    return static_cast<std::uint32_t>(bags.size() - 1);
}

std::vector<DecompositionViolation> check_decomposition(const StaticGraph& g, const TreeDecomposition& d) {
    using K = DecompositionViolation::Kind;
    std::vector<DecompositionViolation> out;
    const std::size_t nb = d.bags.size();
    const std::size_t n = g.vertex_count();

    if (nb == 0) {
        out.push_back({K::not_a_tree, "decomposition has no bags"});
        return out;
    }
    std::vector<std::vector<std::uint32_t>> tree(nb);
    bool edges_ok = true;
    for (const auto& [a, b] : d.tree_edges) {
        if (a >= nb || b >= nb || a == b) {
            out.push_back({K::not_a_tree, "tree edge " + std::to_string(a + 1) + " " + std::to_string(b + 1) + " is malformed"});
            edges_ok = false;
            continue;
        }
        tree[a].push_back(b);
        tree[b].push_back(a);
    }
    if (edges_ok) {
        std::vector<bool> seen(nb, false);
        std::vector<std::uint32_t> stack{0};
        seen[0] = true;
        std::size_t reached = 0;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            ++reached;
            for (auto y : tree[x])
                if (!seen[y]) seen[y] = true, stack.push_back(y);
        }
        if (reached != nb) out.push_back({K::not_a_tree, "tree edges do not connect all bags"});
        else if (d.tree_edges.size() != nb - 1) out.push_back({K::not_a_tree, "tree edges contain a cycle"});
    }

    std::vector<std::vector<std::uint32_t>> holder(n);
    for (std::uint32_t i = 0; i < nb; ++i) {
        for (auto v : d.bags[i]) {
            if (v >= n) {
                out.push_back({K::bad_vertex, "bag " + std::to_string(i + 1) + " holds unknown vertex " + std::to_string(v + 1)});
                continue;
            }
            holder[v].push_back(i);
        }
    }
    for (std::size_t v = 0; v < n; ++v)
        if (holder[v].empty()) out.push_back({K::vertex_uncovered, "vertex " + std::to_string(v + 1) + " in no bag"});

    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (auto i : holder[u])
            if (std::binary_search(d.bags[i].begin(), d.bags[i].end(), v)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back({K::edge_uncovered, "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " in no bag"});
    }

    if (edges_ok) {
        std::vector<int> mark(nb, -1);
        for (std::size_t v = 0; v < n; ++v) {
            if (holder[v].size() < 2) continue;
            for (auto i : holder[v]) mark[i] = static_cast<int>(v);
            std::vector<std::uint32_t> stack{holder[v].front()};
            std::size_t reached = 0;
            mark[holder[v].front()] = -2;
            while (!stack.empty()) {
                auto x = stack.back();
                stack.pop_back();
                ++reached;
                for (auto y : tree[x])
                    if (mark[y] == static_cast<int>(v)) mark[y] = -2, stack.push_back(y);
            }
            if (reached != holder[v].size())
                out.push_back({K::trace_disconnected, "bags holding vertex " + std::to_string(v + 1) + " are not connected"});
            for (auto i : holder[v]) mark[i] = -1;
        }
    }
    return out;
}

int width(const TreeDecomposition& d) {
    if (d.bags.empty()) throw Error(ErrorKind::invalid_argument, "width of a decomposition without bags");
    std::size_t best = 0;
    for (const auto& b : d.bags) best = std::max(best, b.size());
    return static_cast<int>(best) - 1;
}

TreeDecomposition decomposition_from_ordering(const StaticGraph& g, const std::vector<std::uint32_t>& ordering) {
    const std::size_t n = g.vertex_count();
    TreeDecomposition td;
    td.vertex_count = n;
    if (n == 0) {
        td.add_bag({});
        return td;
    }
    if (ordering.size() != n) throw Error(ErrorKind::invalid_argument, "elimination ordering must list every vertex once");
    std::vector<std::size_t> position(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ordering[i] >= n || position[ordering[i]] != n) throw Error(ErrorKind::invalid_argument, "elimination ordering is not a permutation");
        position[ordering[i]] = i;
    }
    std::vector<std::set<std::uint32_t>> adj(n);
    for (std::uint32_t v = 0; v < n; ++v)
        for (auto w : g.neighbors(v)) adj[v].insert(w);

    std::vector<std::uint32_t> parent_vertex(n, std::numeric_limits<std::uint32_t>::max());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t v = ordering[i];
        std::vector<std::uint32_t> later(adj[v].begin(), adj[v].end());
        std::vector<std::uint32_t> bag = later;
        bag.push_back(v);
        td.add_bag(std::move(bag));
        for (std::size_t a = 0; a < later.size(); ++a) {
            adj[later[a]].erase(v);
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                adj[later[a]].insert(later[b]);
                adj[later[b]].insert(later[a]);
            }
        }
        std::size_t best = n;
        for (auto w : later)
            if (position[w] < best) best = position[w];
        if (best != n) parent_vertex[i] = static_cast<std::uint32_t>(best);
        adj[v].clear();
    }
    // Bag i belongs to ordering[i]; parents are later bags. Roots get chained to the first root.
    std::uint32_t first_root = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t i = 0; i < n; ++i) {
        if (parent_vertex[i] != std::numeric_limits<std::uint32_t>::max()) {
            td.connect(i, parent_vertex[i]);
        } else if (first_root == std::numeric_limits<std::uint32_t>::max()) {
            first_root = i;
        } else {
            td.connect(first_root, i);
        }
    }
    return td;
}

namespace {

constexpr unsigned hard_exact_cap = 26;

/// Optimal elimination ordering of a graph with at most hard_exact_cap vertices.
std::pair<int, std::vector<std::uint32_t>> exact_ordering(const StaticGraph& g) {
    const unsigned n = static_cast<unsigned>(g.vertex_count());
    if (n == 0) return {-1, {}};
    using Mask = std::uint32_t;
    std::vector<Mask> adj(n, 0);
    for (unsigned v = 0; v < n; ++v)
        for (auto w : g.neighbors(v)) adj[v] |= Mask{1} << w;

    auto q_size = [&](Mask set, unsigned v) {
        Mask reach = Mask{1} << v;
        Mask frontier = reach;
        Mask boundary = 0;
        while (frontier) {
            Mask nb = 0;
            for (Mask f = frontier; f; f &= f - 1) nb |= adj[std::countr_zero(f)];
            boundary |= nb;
            frontier = nb & set & ~reach;
            reach |= frontier;
        }
        boundary &= ~set & ~(Mask{1} << v);
        return std::popcount(boundary);
    };

    const std::size_t states = std::size_t{1} << n;
    std::vector<std::int8_t> tw(states, 0);
    tw[0] = -1;
    for (std::size_t s = 1; s < states; ++s) {
        const Mask set = static_cast<Mask>(s);
        int best = std::numeric_limits<int>::max();
        for (Mask rest = set; rest; rest &= rest - 1) {
            unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            Mask without = set & ~(Mask{1} << v);
            int prev = tw[without];
            if (prev >= best) continue;
            int value = std::max(prev, q_size(without, v));
            if (value < best) best = value;
        }
        tw[s] = static_cast<std::int8_t>(best);
    }

    std::vector<std::uint32_t> reversed;
    Mask set = static_cast<Mask>(states - 1);
    while (set) {
        const int target = tw[set];
        for (Mask rest = set; rest; rest &= rest - 1) {
            unsigned v = static_cast<unsigned>(std::countr_zero(rest));
            Mask without = set & ~(Mask{1} << v);
            if (std::max<int>(tw[without], q_size(without, v)) == target) {
                reversed.push_back(v);
                set = without;
                break;
            }
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return {tw[states - 1], reversed};
}

/// Biconnected blocks (vertex sets, sorted); isolated vertices form singleton blocks.
std::vector<std::vector<std::uint32_t>> biconnected_blocks(const StaticGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> blocks;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_stack;
    int clock = 0;
    struct Frame {
        std::uint32_t v;
        std::uint32_t parent;
        std::size_t next;
    };
    constexpr auto none = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.neighbors(root).empty()) {
            disc[root] = clock++;
            blocks.push_back({root});
            continue;
        }
        std::vector<Frame> stack{{root, none, 0}};
        disc[root] = low[root] = clock++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbrs = g.neighbors(f.v);
            if (f.next < nbrs.size()) {
                std::uint32_t w = nbrs[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back({f.v, w});
                    disc[w] = low[w] = clock++;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const std::uint32_t v = f.v, parent = f.parent;
            stack.pop_back();
            if (parent == none) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                std::vector<std::uint32_t> block;
                while (!edge_stack.empty()) {
                    auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(a);
                    block.push_back(b);
                    if (a == parent && b == v) break;
                }
                std::sort(block.begin(), block.end());
                block.erase(std::unique(block.begin(), block.end()), block.end());
                blocks.push_back(std::move(block));
            }
        }
    }
    return blocks;
}

std::int64_t find_bag_with(const TreeDecomposition& td, std::uint32_t v) {
    for (std::size_t i = 0; i < td.bags.size(); ++i)
        if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), v)) return static_cast<std::int64_t>(i);
    return -1;
}

}  // namespace

TreewidthResult exact_treewidth(const StaticGraph& g, unsigned exact_limit) {
    TreewidthResult result;
    result.decomposition.vertex_count = g.vertex_count();
    if (g.vertex_count() == 0) {
        result.width = -1;
        result.decomposition.add_bag({});
        return result;
    }
    const unsigned limit = std::min(exact_limit, hard_exact_cap);
    auto blocks = biconnected_blocks(g);
    for (const auto& block : blocks) {
        if (block.size() > limit)
            throw Error(ErrorKind::limit, "exact treewidth refused: a biconnected block has " + std::to_string(block.size()) +
                                              " vertices (limit " + std::to_string(limit) + "); use the min-fill heuristic");
    }

    // Glue block decompositions in an order where each new block meets the
    // processed part in at most one (cut) vertex.
    std::vector<bool> done(blocks.size(), false);
    std::vector<std::int64_t> processed_bag(g.vertex_count(), -1);  // some bag holding v, or -1
    TreeDecomposition& td = result.decomposition;
    int best = -1;
    for (std::size_t count = 0; count < blocks.size(); ++count) {
        std::size_t pick = blocks.size();
        std::int64_t shared = -1;
        for (std::size_t b = 0; b < blocks.size() && pick == blocks.size(); ++b) {
            if (done[b]) continue;
            for (auto v : blocks[b])
                if (processed_bag[v] >= 0) {
                    pick = b;
                    shared = v;
                    break;
                }
        }
        if (pick == blocks.size())
            for (std::size_t b = 0; b < blocks.size(); ++b)
                if (!done[b]) {
                    pick = b;
                    break;
                }
        done[pick] = true;
        const auto& block = blocks[pick];
        StaticGraph sub = g.induced(block);
        auto [w, ordering] = exact_ordering(sub);
        best = std::max(best, w);
        TreeDecomposition local = decomposition_from_ordering(sub, ordering);

        const auto offset = static_cast<std::uint32_t>(td.bags.size());
        for (auto& bag : local.bags) {
            std::vector<std::uint32_t> mapped;
            for (auto x : bag) mapped.push_back(block[x]);
            td.add_bag(std::move(mapped));
        }
        for (const auto& [a, b] : local.tree_edges) td.connect(a + offset, b + offset);
        if (shared >= 0) {
            auto inner = find_bag_with(local, static_cast<std::uint32_t>(std::lower_bound(block.begin(), block.end(), shared) - block.begin()));
            td.connect(static_cast<std::uint32_t>(processed_bag[shared]), static_cast<std::uint32_t>(inner) + offset);
        } else if (offset > 0) {
            td.connect(0, offset);
        }
        for (std::size_t i = offset; i < td.bags.size(); ++i)
            for (auto v : td.bags[i])
                if (processed_bag[v] < 0) processed_bag[v] = static_cast<std::int64_t>(i);
    }
    result.width = best;
    return result;
}

TreeDecomposition minfill_decomposition(const StaticGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::set<std::uint32_t>> adj(n);
    for (std::uint32_t v = 0; v < n; ++v)
        for (auto w : g.neighbors(v)) adj[v].insert(w);
    std::vector<bool> gone(n, false);
    std::vector<std::uint32_t> ordering;
    ordering.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best_fill = std::numeric_limits<std::size_t>::max();
        std::uint32_t best = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (gone[v]) continue;
            std::size_t fill = 0;
            for (auto a = adj[v].begin(); a != adj[v].end() && fill < best_fill; ++a)
                for (auto b = std::next(a); b != adj[v].end(); ++b)
                    if (!adj[*a].contains(*b)) ++fill;
            if (fill < best_fill) {
                best_fill = fill;
                best = v;
                if (fill == 0) break;
            }
        }
        ordering.push_back(best);
        gone[best] = true;
        std::vector<std::uint32_t> nbrs(adj[best].begin(), adj[best].end());
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            adj[nbrs[a]].erase(best);
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                adj[nbrs[a]].insert(nbrs[b]);
                adj[nbrs[b]].insert(nbrs[a]);
            }
        }
        adj[best].clear();
    }
    return decomposition_from_ordering(g, ordering);
}

int local_treewidth(const StaticGraph& g, unsigned radius, unsigned exact_limit) {
    int best = -1;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        auto ball = g.ball(v, radius);
        StaticGraph sub = g.induced(ball);
        try {
            best = std::max(best, exact_treewidth(sub, exact_limit).width);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::limit) throw;
            const auto name = g.origin.empty() ? v + 1 : g.origin[v];
            throw Error(ErrorKind::limit, "local treewidth refused: ball of radius " + std::to_string(radius) + " around vertex " +
                                              std::to_string(name) + " has " + std::to_string(ball.size()) +
                                              " vertices and cannot be solved exactly (" + e.what() + ")");
        }
    }
    return best;
}

namespace {

/// Copies every snapshot decomposition into `out`, mapped to element ids of
/// the treewidth-preserving structure and augmented with the time element.
/// Returns, per time (in T order), the index of the first copied bag or -1.
std::vector<std::int64_t> lift_snapshots(const DynamicGraph& g, const RelationalStructure& s, const SnapshotDecompositions& per_snapshot,
                                         TreeDecomposition& out) {
    std::vector<std::int64_t> first;
    for (Time t : g.time().times) {
        StaticGraph snap = snapshot(g, t);
        auto it = per_snapshot.find(t);
        if (it == per_snapshot.end()) {
            if (snap.vertex_count() == 0) {
                first.push_back(-1);
                continue;
            }
            throw Error(ErrorKind::invalid_argument, "no decomposition supplied for snapshot " + std::to_string(t));
        }
        const TreeDecomposition& d = it->second;
        auto problems = check_decomposition(snap, d);
        if (!problems.empty())
            throw Error(ErrorKind::invalid_argument, "decomposition of snapshot " + std::to_string(t) + " is invalid: " + problems.front().message);
        const ElementId te = *s.time_element(t);
        const auto offset = static_cast<std::uint32_t>(out.bags.size());
        for (const auto& bag : d.bags) {
            std::vector<std::uint32_t> lifted{te};
            for (auto x : bag) lifted.push_back(*s.copy(snap.origin[x], t));
            out.add_bag(std::move(lifted));
        }
        for (const auto& [a, b] : d.tree_edges) out.connect(a + offset, b + offset);
        first.push_back(d.bags.empty() ? -1 : static_cast<std::int64_t>(offset));
    }
    return first;
}

}  // namespace

TreeDecomposition build_clique_time_decomposition(const DynamicGraph& g, const SnapshotDecompositions& per_snapshot) {
    RelationalStructure s = translate_tw(g, TimeEncoding::clique);
    TreeDecomposition out;
    out.vertex_count = s.size();
    auto first = lift_snapshots(g, s, per_snapshot, out);
    std::vector<std::uint32_t> clique;
    for (Time t : g.time().times) clique.push_back(*s.time_element(t));
    const auto hub = out.add_bag(std::move(clique));
    for (auto f : first)
        if (f >= 0) out.connect(hub, static_cast<std::uint32_t>(f));
    return out;
}

TreeDecomposition build_linear_time_decomposition(const DynamicGraph& g, const SnapshotDecompositions& per_snapshot) {
    RelationalStructure s = translate_tw(g, TimeEncoding::linear);
    TreeDecomposition out;
    out.vertex_count = s.size();
    auto first = lift_snapshots(g, s, per_snapshot, out);
    const auto line = g.time().linear_order();
    const ElementId start = *s.start();
    if (line.empty()) {
        out.add_bag({start});
        return out;
    }
    std::uint32_t previous = out.add_bag({start, *s.time_element(line.front())});
    for (std::size_t i = 0; i < line.size(); ++i) {
        const ElementId te = *s.time_element(line[i]);
        const auto single = out.add_bag({te});
        out.connect(previous, single);
        const auto f = first[g.time().index_of(line[i])];
        if (f >= 0) out.connect(single, static_cast<std::uint32_t>(f));
        previous = single;
        if (i + 1 < line.size()) {
            const auto pair = out.add_bag({te, *s.time_element(line[i + 1])});
            out.connect(previous, pair);
            previous = pair;
        }
    }
    return out;
}

namespace {

[[noreturn]] void td_error(std::size_t line, const std::string& msg) {
    throw Error(ErrorKind::syntax, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

TreeDecomposition read_td(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t nbags = 0, maxbag = 0, n = 0;
    TreeDecomposition td;
    std::vector<bool> bag_seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "s") {
            std::string kind;
            if (have_header) td_error(lineno, "duplicate header");
            if (!(ls >> kind >> nbags >> maxbag >> n) || kind != "td") td_error(lineno, "expected 's td <bags> <max-bag> <n>'");
            td.bags.assign(nbags, {});
            td.vertex_count = n;
            bag_seen.assign(nbags, false);
            have_header = true;
            continue;
        }
        if (!have_header) td_error(lineno, "line before 's td' header");
        if (head == "b") {
            long long id = 0;
            if (!(ls >> id) || id < 1 || static_cast<std::size_t>(id) > nbags) td_error(lineno, "bad bag id");
            if (bag_seen[id - 1]) td_error(lineno, "duplicate bag " + std::to_string(id));
            bag_seen[id - 1] = true;
            std::vector<std::uint32_t> bag;
            long long v = 0;
            while (ls >> v) {
                if (v < 1 || static_cast<std::size_t>(v) > n) td_error(lineno, "vertex " + std::to_string(v) + " out of range");
                bag.push_back(static_cast<std::uint32_t>(v - 1));
            }
            if (!ls.eof()) td_error(lineno, "bad vertex token");
            std::sort(bag.begin(), bag.end());
            if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) td_error(lineno, "vertex repeated in bag");
            if (bag.size() > maxbag) td_error(lineno, "bag larger than announced maximum");
            td.bags[id - 1] = std::move(bag);
            continue;
        }
        std::istringstream es(line);
        long long a = 0, b = 0;
        std::string extra;
        if (!(es >> a >> b) || (es >> extra)) td_error(lineno, "expected '<i> <j>' tree edge");
        if (a < 1 || b < 1 || static_cast<std::size_t>(a) > nbags || static_cast<std::size_t>(b) > nbags) td_error(lineno, "tree edge names an unknown bag");
        td.connect(static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1));
    }
    if (!have_header) throw Error(ErrorKind::syntax, "missing 's td' header");
    for (std::size_t i = 0; i < nbags; ++i)
        if (!bag_seen[i]) throw Error(ErrorKind::syntax, "bag " + std::to_string(i + 1) + " never listed");
    return td;
}

TreeDecomposition parse_td(const std::string& text) {
    std::istringstream in(text);
    return read_td(in);
}

void write_td(std::ostream& out, const TreeDecomposition& d) {
    std::size_t maxbag = 0;
    for (const auto& b : d.bags) maxbag = std::max(maxbag, b.size());
    out << "s td " << d.bags.size() << ' ' << maxbag << ' ' << d.vertex_count << '\n';
    for (std::size_t i = 0; i < d.bags.size(); ++i) {
        out << "b " << i + 1;
        for (auto v : d.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    for (const auto& [a, b] : d.tree_edges) out << a + 1 << ' ' << b + 1 << '\n';
}

std::string format_td(const TreeDecomposition& d) {
    std::ostringstream out;
    write_td(out, d);
    return out.str();
}

}  // namespace tempotw
