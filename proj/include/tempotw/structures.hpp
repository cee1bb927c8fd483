#pragma once

#include "tempotw/static_graph.hpp"
#include "tempotw/temporal_graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace tempotw {

enum class Variant { ltw_preserving, tw_preserving };
enum class TimeEncoding { clique, linear };

struct TranslationConfig {
    Variant variant = Variant::ltw_preserving;
    TimeEncoding time_encoding = TimeEncoding::clique;
};

using ElementId = std::uint32_t;

struct Element {
    enum class Kind { vertex_copy, time, start };
    Kind kind = Kind::vertex_copy;
    Vertex vertex = 0;  // vertex_copy only
    Time time = 0;      // vertex_copy and time

    /// `v3@2`, `t2` or `s`.
    std::string tag() const;
};

/// Named relation of fixed arity (at most 3) over universe element ids.
class Relation {
public:
    static constexpr unsigned max_arity = 3;

    Relation(std::string name, unsigned arity);

    const std::string& name() const noexcept { return name_; }
    unsigned arity() const noexcept { return arity_; }

    bool insert(std::span<const ElementId> tuple);
    bool contains(std::span<const ElementId> tuple) const;
    bool contains(ElementId a) const { return arity_ == 1 && lookup_.contains(encode1(a)); }

    const std::set<std::vector<ElementId>>& tuples() const noexcept { return tuples_; }
    std::size_t size() const noexcept { return tuples_.size(); }

private:
    static std::uint64_t encode1(ElementId a) { return a; }
    std::uint64_t encode(std::span<const ElementId> tuple) const;

    std::string name_;
    unsigned arity_;
    std::set<std::vector<ElementId>> tuples_;
    std::unordered_set<std::uint64_t> lookup_;
};

/// Finite universe, named relations and the interpreted origin function f_V
/// (defined on vertex copies only; not part of the relational vocabulary).
class RelationalStructure {
public:
    ElementId add_element(const Element& e);
    Relation& declare(const std::string& name, unsigned arity);
    void add_tuple(const std::string& name, std::span<const ElementId> tuple);
    void add_tuple(const std::string& name, std::initializer_list<ElementId> tuple) {
        add_tuple(name, std::span<const ElementId>(tuple.begin(), tuple.size()));
    }

    std::size_t size() const noexcept { return universe_.size(); }
    const std::vector<Element>& universe() const noexcept { return universe_; }
    const Element& element(ElementId id) const { return universe_.at(id); }
    const std::map<std::string, Relation>& relations() const noexcept { return relations_; }
    const Relation* find(const std::string& name) const;

    std::optional<Vertex> origin(ElementId id) const;
    std::optional<ElementId> copy(Vertex v, Time t) const;
    std::optional<ElementId> time_element(Time t) const;
    std::optional<ElementId> start() const { return start_; }

    TranslationConfig config;
    std::vector<Time> times;  // T(G), ascending ids

private:
    std::vector<Element> universe_;
    std::map<std::string, Relation> relations_;
    std::map<std::pair<Vertex, Time>, ElementId> copies_;
    std::map<Time, ElementId> time_elements_;
    std::optional<ElementId> start_;
};

/// Relation names used by the translations.
namespace rel {
inline const std::string vertex = "V";
inline const std::string edge = "E";
inline const std::string time = "T";
inline const std::string order = "R";
inline const std::string xi = "Xi";
std::string live_vertex(Time t);  // LV@t
std::string live_edge(Time t);    // LE@t
std::string origin_of(Vertex v);  // Lv@v
}  // namespace rel

/// Local-treewidth-preserving structure: V, E (same-time copies joined by a
/// live edge), T, R, and the per-time liveness families LV@t / LE@t.
RelationalStructure translate_ltw(const DynamicGraph& g, TimeEncoding encoding);

/// Treewidth-preserving structure: V, Lv@v, Xi(u^t, v^t, t), T, R.
RelationalStructure translate_tw(const DynamicGraph& g, TimeEncoding encoding);

RelationalStructure translate(const DynamicGraph& g, const TranslationConfig& cfg);

/// Gaifman graph: one vertex per element, an edge whenever two distinct
/// elements share a tuple. f_V contributes nothing. origin[i] == i.
StaticGraph gaifman(const RelationalStructure& s);

/// Line dump: `u <id> <tag>`, `r <name> <arity> <id...>`, `f <id> <vertex>`; ids 1-based.
void write_structure(std::ostream& out, const RelationalStructure& s);
std::string format_structure(const RelationalStructure& s);

}  // namespace tempotw
