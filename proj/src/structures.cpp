#include "tempotw/structures.hpp"

#include "tempotw/error.hpp"

#include <ostream>
#include <sstream>

namespace tempotw {

std::string Element::tag() const {
    switch (kind) {
        case Kind::vertex_copy: return "v" + std::to_string(vertex) + "@" + std::to_string(time);
        case Kind::time: return "t" + std::to_string(time);
        case Kind::start: return "s";
    }
    return "?";
}

Relation::Relation(std::string name, unsigned arity) : name_(std::move(name)), arity_(arity) {
    if (arity == 0 || arity > max_arity)
        throw Error(ErrorKind::invalid_argument, "relation " + name_ + ": arity must be 1.." + std::to_string(max_arity));
}

std::uint64_t Relation::encode(std::span<const ElementId> tuple) const {
    std::uint64_t key = 0;
    for (ElementId x : tuple) key = (key << 21) | x;
    return key;
}

bool Relation::insert(std::span<const ElementId> tuple) {
    if (tuple.size() != arity_)
        throw Error(ErrorKind::invariant, "relation " + name_ + " has arity " + std::to_string(arity_) + ", got a " +
                                              std::to_string(tuple.size()) + "-tuple");
    for (ElementId x : tuple)
        if (x >= (1u << 21)) throw Error(ErrorKind::limit, "universe too large for relation encoding");
    if (!lookup_.insert(encode(tuple)).second) return false;
    tuples_.insert(std::vector<ElementId>(tuple.begin(), tuple.end()));
    return true;
}

bool Relation::contains(std::span<const ElementId> tuple) const {
    return tuple.size() == arity_ && lookup_.contains(encode(tuple));
}

ElementId RelationalStructure::add_element(const Element& e) {
    ElementId id = static_cast<ElementId>(universe_.size());
    switch (e.kind) {
        case Element::Kind::vertex_copy:
            if (!copies_.emplace(std::pair{e.vertex, e.time}, id).second) throw Error(ErrorKind::invariant, "duplicate copy " + e.tag());
            break;
        case Element::Kind::time:
            if (!time_elements_.emplace(e.time, id).second) throw Error(ErrorKind::invariant, "duplicate time element " + e.tag());
            break;
        case Element::Kind::start:
            if (start_) throw Error(ErrorKind::invariant, "duplicate start constant");
            start_ = id;
            break;
    }
    universe_.push_back(e);
    return id;
}

Relation& RelationalStructure::declare(const std::string& name, unsigned arity) {
    auto it = relations_.find(name);
    if (it != relations_.end()) {
        if (it->second.arity() != arity) throw Error(ErrorKind::invariant, "relation " + name + " redeclared with another arity");
        return it->second;
    }
    return relations_.emplace(name, Relation(name, arity)).first->second;
}

void RelationalStructure::add_tuple(const std::string& name, std::span<const ElementId> tuple) {
    auto it = relations_.find(name);
    if (it == relations_.end()) throw Error(ErrorKind::invariant, "undeclared relation " + name);
    for (ElementId x : tuple)
        if (x >= universe_.size()) throw Error(ErrorKind::invariant, "tuple member outside the universe in " + name);
    it->second.insert(tuple);
}

const Relation* RelationalStructure::find(const std::string& name) const {
    auto it = relations_.find(name);
    return it == relations_.end() ? nullptr : &it->second;
}

std::optional<Vertex> RelationalStructure::origin(ElementId id) const {
    const Element& e = universe_.at(id);
    if (e.kind != Element::Kind::vertex_copy) return std::nullopt;
    return e.vertex;
}

std::optional<ElementId> RelationalStructure::copy(Vertex v, Time t) const {
    auto it = copies_.find({v, t});
    if (it == copies_.end()) return std::nullopt;
    return it->second;
}

std::optional<ElementId> RelationalStructure::time_element(Time t) const {
    auto it = time_elements_.find(t);
    if (it == time_elements_.end()) return std::nullopt;
    return it->second;
}

namespace rel {
std::string live_vertex(Time t) { return "LV@" + std::to_string(t); }
std::string live_edge(Time t) { return "LE@" + std::to_string(t); }
std::string origin_of(Vertex v) { return "Lv@" + std::to_string(v); }
}  // namespace rel

namespace {

/// Universe shared by both variants: copies ordered by (time, vertex), then
/// time elements, then s for linear time.
RelationalStructure base_structure(const DynamicGraph& g, const TranslationConfig& cfg) {
    if (cfg.time_encoding == TimeEncoding::linear && !g.time().total)
        throw Error(ErrorKind::unsupported, "linear time encoding requires a strict total time order");
    RelationalStructure s;
    s.config = cfg;
    s.times = g.time().times;
    for (Time t : g.time().times)
        for (Vertex v = 1; v <= g.vertex_count(); ++v)
            if (g.alive(v, t)) s.add_element({Element::Kind::vertex_copy, v, t});
    for (Time t : g.time().times) s.add_element({Element::Kind::time, 0, t});
    if (cfg.time_encoding == TimeEncoding::linear) s.add_element({Element::Kind::start, 0, 0});

    s.declare(rel::vertex, 1);
    s.declare(rel::time, 1);
    s.declare(rel::order, 2);
    for (ElementId id = 0; id < s.size(); ++id) {
        const Element& e = s.element(id);
        if (e.kind == Element::Kind::vertex_copy) s.add_tuple(rel::vertex, {id});
        if (e.kind == Element::Kind::time) s.add_tuple(rel::time, {id});
    }
    if (cfg.time_encoding == TimeEncoding::clique) {
        for (const auto& [a, b] : g.time().order) s.add_tuple(rel::order, {*s.time_element(a), *s.time_element(b)});
    } else {
        auto line = g.time().linear_order();
        if (!line.empty()) s.add_tuple(rel::order, {*s.start(), *s.time_element(line.front())});
        for (std::size_t i = 1; i < line.size(); ++i)
            s.add_tuple(rel::order, {*s.time_element(line[i - 1]), *s.time_element(line[i])});
    }
    return s;
}

}  // namespace

RelationalStructure translate_ltw(const DynamicGraph& g, TimeEncoding encoding) {
    RelationalStructure s = base_structure(g, {Variant::ltw_preserving, encoding});
    s.declare(rel::edge, 2);
    for (Time t : g.time().times) {
        s.declare(rel::live_vertex(t), 1);
        s.declare(rel::live_edge(t), 2);
    }
    for (ElementId id = 0; id < s.size(); ++id) {
        const Element& e = s.element(id);
        if (e.kind != Element::Kind::vertex_copy) continue;
        for (Time t : g.vertex_life(e.vertex)) s.add_tuple(rel::live_vertex(t), {id});
    }
    for (const auto& [key, life] : g.edges()) {
        for (Time t : life) {
            ElementId a = *s.copy(key.u, t), b = *s.copy(key.v, t);
            s.add_tuple(rel::edge, {a, b});
            s.add_tuple(rel::live_edge(t), {a, b});
            if (!g.directed()) {
                s.add_tuple(rel::edge, {b, a});
                s.add_tuple(rel::live_edge(t), {b, a});
            }
        }
    }
    return s;
}

RelationalStructure translate_tw(const DynamicGraph& g, TimeEncoding encoding) {
    RelationalStructure s = base_structure(g, {Variant::tw_preserving, encoding});
    s.declare(rel::xi, 3);
    for (Vertex v = 1; v <= g.vertex_count(); ++v) s.declare(rel::origin_of(v), 1);
    for (ElementId id = 0; id < s.size(); ++id) {
        const Element& e = s.element(id);
        if (e.kind == Element::Kind::vertex_copy) s.add_tuple(rel::origin_of(e.vertex), {id});
    }
    for (const auto& [key, life] : g.edges()) {
        for (Time t : life) {
            ElementId a = *s.copy(key.u, t), b = *s.copy(key.v, t), te = *s.time_element(t);
            s.add_tuple(rel::xi, {a, b, te});
            if (!g.directed()) s.add_tuple(rel::xi, {b, a, te});
        }
    }
    return s;
}

RelationalStructure translate(const DynamicGraph& g, const TranslationConfig& cfg) {
    return cfg.variant == Variant::ltw_preserving ? translate_ltw(g, cfg.time_encoding) : translate_tw(g, cfg.time_encoding);
}

StaticGraph gaifman(const RelationalStructure& s) {
    StaticGraph out(s.size(), false);
    for (const auto& [name, relation] : s.relations()) {
        for (const auto& tuple : relation.tuples())
            for (std::size_t i = 0; i < tuple.size(); ++i)
                for (std::size_t j = i + 1; j < tuple.size(); ++j)
                    if (tuple[i] != tuple[j]) out.add_edge(tuple[i], tuple[j]);
    }
    out.origin.resize(s.size());
    for (ElementId i = 0; i < s.size(); ++i) out.origin[i] = i;
    return out;
}

void write_structure(std::ostream& out, const RelationalStructure& s) {
    for (ElementId id = 0; id < s.size(); ++id) out << "u " << id + 1 << ' ' << s.element(id).tag() << '\n';
    for (const auto& [name, relation] : s.relations()) {
        for (const auto& tuple : relation.tuples()) {
            out << "r " << name << ' ' << relation.arity();
            for (ElementId x : tuple) out << ' ' << x + 1;
            out << '\n';
        }
    }
    for (ElementId id = 0; id < s.size(); ++id)
        if (auto v = s.origin(id)) out << "f " << id + 1 << ' ' << *v << '\n';
}

std::string format_structure(const RelationalStructure& s) {
    std::ostringstream out;
    write_structure(out, s);
    return out.str();
}

}  // namespace tempotw
