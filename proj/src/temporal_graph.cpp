#include "tempotw/temporal_graph.hpp"

#include "tempotw/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace tempotw {

namespace {

bool order_is_strict_total(const std::vector<Time>& times, const std::set<std::pair<Time, Time>>& order) {
    for (const auto& [a, b] : order)
        if (a == b) return false;
    for (std::size_t i = 0; i < times.size(); ++i) {
        for (std::size_t j = i + 1; j < times.size(); ++j) {
            bool ab = order.contains({times[i], times[j]});
            bool ba = order.contains({times[j], times[i]});
            if (ab == ba) return false;
        }
    }
    for (const auto& [a, b] : order)
        for (Time c : times)
            if (order.contains({b, c}) && !order.contains({a, c})) return false;
    return true;
}

}  // namespace

TimeDomain TimeDomain::natural(std::vector<Time> times) {
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    TimeDomain d;
    for (std::size_t i = 0; i < times.size(); ++i)
        for (std::size_t j = i + 1; j < times.size(); ++j) d.order.insert({times[i], times[j]});
    d.times = std::move(times);
    d.total = true;
    return d;
}

TimeDomain TimeDomain::range(Time tmax) {
    std::vector<Time> times(tmax);
    for (Time t = 1; t <= tmax; ++t) times[t - 1] = t;
    return natural(std::move(times));
}

TimeDomain TimeDomain::with_order(std::vector<Time> times, std::set<std::pair<Time, Time>> order) {
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    TimeDomain d;
    d.total = order_is_strict_total(times, order);
    d.times = std::move(times);
    d.order = std::move(order);
    return d;
}

bool TimeDomain::contains(Time t) const { return std::binary_search(times.begin(), times.end(), t); }

std::size_t TimeDomain::index_of(Time t) const {
    auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end() || *it != t) throw Error(ErrorKind::invalid_argument, "unknown time " + std::to_string(t));
    return static_cast<std::size_t>(it - times.begin());
}

std::vector<Time> TimeDomain::linear_order() const {
    if (!total) throw Error(ErrorKind::unsupported, "time order is not a strict total order");
    std::vector<std::pair<std::size_t, Time>> ranked;
    for (Time t : times) {
        std::size_t before = 0;
        for (Time u : times)
            if (precedes(u, t)) ++before;
        ranked.push_back({before, t});
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<Time> out;
    for (const auto& [rank, t] : ranked) out.push_back(t);
    return out;
}

bool TimeDomain::is_natural() const { return *this == natural(times); }

DynamicGraph::DynamicGraph(std::size_t n, bool directed, TimeDomain time)
    : directed_(directed), time_(std::move(time)), vertex_life_(n) {}

void DynamicGraph::set_vertex_life(Vertex v, TimeSet life) {
    if (v < 1 || v > vertex_count()) throw Error(ErrorKind::invalid_argument, "vertex " + std::to_string(v) + " out of range");
    vertex_life_[v - 1] = std::move(life);
}

EdgeKey DynamicGraph::key(Vertex u, Vertex v) const {
    if (directed_ || u < v) return {u, v};
    return {v, u};
}

void DynamicGraph::set_edge_life(Vertex u, Vertex v, TimeSet life) {
    if (u < 1 || v < 1 || u > vertex_count() || v > vertex_count())
        throw Error(ErrorKind::invalid_argument, "edge endpoint out of range");
    edges_[key(u, v)] = std::move(life);
}

const TimeSet& DynamicGraph::vertex_life(Vertex v) const {
    if (v < 1 || v > vertex_count()) throw Error(ErrorKind::invalid_argument, "unknown vertex " + std::to_string(v));
    return vertex_life_[v - 1];
}

const TimeSet& DynamicGraph::edge_life(Vertex u, Vertex v) const {
    static const TimeSet empty;
    auto it = edges_.find(key(u, v));
    return it == edges_.end() ? empty : it->second;
}

std::vector<Violation> validate(const DynamicGraph& g) {
    std::vector<Violation> out;
    using K = Violation::Kind;
    const auto& dom = g.time();
    for (const auto& [a, b] : dom.order) {
        if (a == b) out.push_back({K::reflexive_order, "order contains (" + std::to_string(a) + "," + std::to_string(a) + ")"});
        if (!dom.contains(a) || !dom.contains(b))
            out.push_back({K::unknown_time, "order pair (" + std::to_string(a) + "," + std::to_string(b) + ") uses an unknown time"});
    }
    if (dom.total && !order_is_strict_total(dom.times, dom.order))
        out.push_back({K::not_total, "time domain flagged total but order is not a strict total order"});
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        for (Time t : g.vertex_life(v))
            if (!dom.contains(t))
                out.push_back({K::unknown_time, "vertex " + std::to_string(v) + " alive at unknown time " + std::to_string(t)});
    for (const auto& [e, life] : g.edges()) {
        const std::string name = "edge " + std::to_string(e.u) + " " + std::to_string(e.v);
        if (e.u < 1 || e.v < 1 || e.u > g.vertex_count() || e.v > g.vertex_count()) {
            out.push_back({K::vertex_range, name + " has an endpoint out of range"});
            continue;
        }
        if (e.u == e.v) out.push_back({K::self_loop, "self-loop at vertex " + std::to_string(e.u)});
        for (Time t : life) {
            if (!dom.contains(t)) {
                out.push_back({K::unknown_time, name + " live at unknown time " + std::to_string(t)});
                continue;
            }
            for (Vertex end : {e.u, e.v})
                if (!g.alive(end, t))
                    out.push_back({K::dead_endpoint, name + " live at t=" + std::to_string(t) + " but vertex " +
                                                         std::to_string(end) + " dead"});
        }
    }
    return out;
}

namespace {

StaticGraph project(const DynamicGraph& g, auto&& vertex_in, auto&& edge_in) {
    std::vector<std::int64_t> position(g.vertex_count() + 1, -1);
    std::vector<std::uint32_t> origin;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
        if (vertex_in(v)) {
            position[v] = static_cast<std::int64_t>(origin.size());
            origin.push_back(v);
        }
    }
    StaticGraph out(origin.size(), g.directed());
    for (const auto& [e, life] : g.edges()) {
        if (!edge_in(life)) continue;
        if (position[e.u] < 0 || position[e.v] < 0)
            throw Error(ErrorKind::invariant, "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " live with a dead endpoint");
        out.add_edge(static_cast<StaticGraph::Id>(position[e.u]), static_cast<StaticGraph::Id>(position[e.v]));
    }
    out.origin = std::move(origin);
    return out;
}

}  // namespace

StaticGraph snapshot(const DynamicGraph& g, Time t) {
    if (!g.time().contains(t)) throw Error(ErrorKind::invalid_argument, "unknown time " + std::to_string(t));
    return project(g, [&](Vertex v) { return g.alive(v, t); }, [&](const TimeSet& life) { return life.contains(t); });
}

StaticGraph union_graph(const DynamicGraph& g) {
    return project(g, [&](Vertex v) { return !g.vertex_life(v).empty(); },
                   [](const TimeSet& life) { return !life.empty(); });
}

std::string format_timeset(const TimeSet& s) {
    if (s.empty()) return "-";
    std::string out;
    auto it = s.begin();
    while (it != s.end()) {
        Time lo = *it, hi = *it;
        ++it;
        while (it != s.end() && *it == hi + 1) hi = *it++;
        if (!out.empty()) out += ',';
        out += std::to_string(lo);
        if (hi != lo) out += "-" + std::to_string(hi);
    }
    return out;
}

namespace {

Time parse_time_number(const std::string& tok) {
    if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw Error(ErrorKind::syntax, "bad time '" + tok + "'");
    return static_cast<Time>(std::stoul(tok));
}

}  // namespace

TimeSet parse_timeset(const std::string& text) {
    TimeSet out;
    if (text == "-") return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t dash = part.find('-');
        if (dash == std::string::npos) {
            out.insert(parse_time_number(part));
        } else {
            Time lo = parse_time_number(part.substr(0, dash));
            Time hi = parse_time_number(part.substr(dash + 1));
            if (hi < lo) throw Error(ErrorKind::syntax, "empty range '" + part + "'");
            for (Time t = lo; t <= hi; ++t) out.insert(t);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

namespace {

[[noreturn]] void tgr_error(ErrorKind kind, std::size_t line, const std::string& msg) {
    throw Error(kind, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

DynamicGraph read_tgr(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::size_t n = 0, m = 0;
    Time tmax = 0;
    bool directed = false;
    int edge_style = 0;  // 0 none yet, 1 'e', 2 'a'
    std::vector<bool> vertex_seen;
    std::vector<std::pair<EdgeKey, TimeSet>> edge_lines;
    std::vector<std::size_t> edge_lineno;
    std::vector<TimeSet> vertex_life;
    std::set<std::pair<Time, Time>> order;
    bool any_order = false;

    auto read_vertex = [&](std::istringstream& ls, std::size_t ln) -> Vertex {
        long long x = 0;
        if (!(ls >> x)) tgr_error(ErrorKind::syntax, ln, "expected vertex id");
        if (x < 1 || static_cast<std::size_t>(x) > n) tgr_error(ErrorKind::syntax, ln, "vertex " + std::to_string(x) + " out of range");
        return static_cast<Vertex>(x);
    };
    auto read_times = [&](std::istringstream& ls, std::size_t ln) -> TimeSet {
        std::string tok, extra;
        if (!(ls >> tok)) tgr_error(ErrorKind::syntax, ln, "expected time set");
        if (ls >> extra) tgr_error(ErrorKind::syntax, ln, "trailing token '" + extra + "'");
        TimeSet s;
        try {
            s = parse_timeset(tok);
        } catch (const Error& e) {
            tgr_error(ErrorKind::syntax, ln, e.what());
        }
        for (Time t : s)
            if (t < 1 || t > tmax) tgr_error(ErrorKind::invariant, ln, "time " + std::to_string(t) + " out of range 1.." + std::to_string(tmax));
        return s;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "p") {
            if (have_header) tgr_error(ErrorKind::syntax, lineno, "duplicate header");
            std::string kind;
            long long nn = -1, mm = -1, tt = -1;
            if (!(ls >> kind >> nn >> mm >> tt) || kind != "tgr" || nn < 0 || mm < 0 || tt < 0)
                tgr_error(ErrorKind::syntax, lineno, "expected 'p tgr <n> <m> <tmax>'");
            std::string flag;
            if (ls >> flag) {
                if (flag == "directed") directed = true;
                else if (flag != "undirected") tgr_error(ErrorKind::syntax, lineno, "unknown header flag '" + flag + "'");
                edge_style = directed ? 2 : 1;
            }
            n = static_cast<std::size_t>(nn);
            m = static_cast<std::size_t>(mm);
            tmax = static_cast<Time>(tt);
            vertex_seen.assign(n + 1, false);
            vertex_life.assign(n + 1, {});
            have_header = true;
            continue;
        }
        if (!have_header) tgr_error(ErrorKind::syntax, lineno, "'" + head + "' line before header");
        if (head == "v") {
            Vertex v = read_vertex(ls, lineno);
            if (vertex_seen[v]) tgr_error(ErrorKind::syntax, lineno, "duplicate line for vertex " + std::to_string(v));
            vertex_seen[v] = true;
            vertex_life[v] = read_times(ls, lineno);
        } else if (head == "e" || head == "a") {
            int style = head == "e" ? 1 : 2;
            if (edge_style != 0 && edge_style != style)
                tgr_error(ErrorKind::syntax, lineno, "mixed 'e' and 'a' lines (or line kind contradicts header)");
            edge_style = style;
            Vertex u = read_vertex(ls, lineno);
            Vertex v = read_vertex(ls, lineno);
            if (u == v) tgr_error(ErrorKind::invariant, lineno, "self-loop at vertex " + std::to_string(u));
            TimeSet life = read_times(ls, lineno);
            EdgeKey k = (style == 2 || u < v) ? EdgeKey{u, v} : EdgeKey{v, u};
            edge_lines.push_back({k, std::move(life)});
            edge_lineno.push_back(lineno);
        } else if (head == "o") {
            long long a = 0, b = 0;
            std::string extra;
            if (!(ls >> a >> b) || (ls >> extra)) tgr_error(ErrorKind::syntax, lineno, "expected 'o <t1> <t2>'");
            if (a < 1 || b < 1 || a > tmax || b > tmax) tgr_error(ErrorKind::invariant, lineno, "order pair uses a time outside 1.." + std::to_string(tmax));
            if (a == b) tgr_error(ErrorKind::invariant, lineno, "order pair (" + std::to_string(a) + "," + std::to_string(a) + ") is reflexive");
            order.insert({static_cast<Time>(a), static_cast<Time>(b)});
            any_order = true;
        } else {
            tgr_error(ErrorKind::syntax, lineno, "unknown line type '" + head + "'");
        }
    }
    if (!have_header) throw Error(ErrorKind::syntax, "missing 'p tgr' header");
    if (edge_lines.size() != m)
        throw Error(ErrorKind::syntax, "header announces " + std::to_string(m) + " edge lines, found " + std::to_string(edge_lines.size()));

    directed = edge_style == 2;
    std::vector<Time> times(tmax);
    for (Time t = 1; t <= tmax; ++t) times[t - 1] = t;
    TimeDomain dom = any_order ? TimeDomain::with_order(std::move(times), std::move(order)) : TimeDomain::natural(std::move(times));
    DynamicGraph g(n, directed, std::move(dom));
    for (Vertex v = 1; v <= n; ++v) g.set_vertex_life(v, std::move(vertex_life[v]));
    std::set<EdgeKey> seen;
    for (std::size_t i = 0; i < edge_lines.size(); ++i) {
        const auto& [k, life] = edge_lines[i];
        if (!seen.insert(k).second)
            tgr_error(ErrorKind::syntax, edge_lineno[i], "duplicate edge " + std::to_string(k.u) + " " + std::to_string(k.v));
        for (Time t : life)
            for (Vertex end : {k.u, k.v})
                if (!g.alive(end, t))
                    tgr_error(ErrorKind::invariant, edge_lineno[i],
                              "edge " + std::to_string(k.u) + " " + std::to_string(k.v) + " live at t=" + std::to_string(t) +
                                  " but vertex " + std::to_string(end) + " dead");
        g.set_edge_life(k.u, k.v, life);
    }
    return g;
}

DynamicGraph load_tgr(const std::string& text) {
    std::istringstream in(text);
    return read_tgr(in);
}

void write_tgr(std::ostream& out, const DynamicGraph& g) {
    const auto& dom = g.time();
    Time tmax = static_cast<Time>(dom.times.size());
    for (std::size_t i = 0; i < dom.times.size(); ++i)
        if (dom.times[i] != i + 1) throw Error(ErrorKind::unsupported, ".tgr requires times 1..tmax");
    out << "p tgr " << g.vertex_count() << ' ' << g.edges().size() << ' ' << tmax;
    if (g.directed()) out << " directed";
    out << '\n';
    for (Vertex v = 1; v <= g.vertex_count(); ++v)
        if (!g.vertex_life(v).empty()) out << "v " << v << ' ' << format_timeset(g.vertex_life(v)) << '\n';
    const char tag = g.directed() ? 'a' : 'e';
    for (const auto& [e, life] : g.edges()) out << tag << ' ' << e.u << ' ' << e.v << ' ' << format_timeset(life) << '\n';
    if (!dom.is_natural()) {
        if (dom.order.empty()) throw Error(ErrorKind::unsupported, ".tgr cannot express an empty order on several times");
        for (const auto& [a, b] : dom.order) out << "o " << a << ' ' << b << '\n';
    }
}

std::string format_tgr(const DynamicGraph& g) {
    std::ostringstream out;
    write_tgr(out, g);
    return out.str();
}

}  // namespace tempotw
