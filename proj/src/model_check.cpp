#include "tempotw/error.hpp"
#include "tempotw/logic.hpp"

#include <algorithm>
#include <unordered_map>

namespace tempotw {

namespace {

struct Term {
    bool constant = false;
    std::uint32_t value = 0;  // element id when constant, individual slot otherwise
};

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
        std::uint64_t h = key.size();
        for (auto x : key) h = splitmix64(h ^ x);
        return static_cast<std::size_t>(h);
    }
};

using MemoTable = std::unordered_map<std::vector<std::uint32_t>, bool, KeyHash>;

struct Node {
    NodeKind kind;
    std::uint32_t slot = 0;
    const Relation* relation = nullptr;
    std::vector<Term> terms;
    std::vector<std::unique_ptr<Node>> kids;
    std::vector<ElementId> domain;          // set quantifiers
    MemoTable* memo = nullptr;              // individual quantifiers without free set variables
    std::vector<std::uint32_t> free_slots;  // memo key, canonical (name) order
};

struct FreeVars {
    std::set<std::string> individuals;
    std::set<std::string> sets;
};

class Compiler {
public:
    explicit Compiler(const RelationalStructure& s) : s_(s) {}

    struct Binding {
        bool is_set;
        std::uint32_t slot;
    };

    std::uint32_t bind_individual(const std::string& name) {
        scope_.push_back({name, {false, individual_slots_}});
        return individual_slots_++;
    }

    std::uint32_t bind_set(const std::string& name, std::vector<ElementId> domain) {
        if (domain.size() > 63)
            throw Error(ErrorKind::limit, "set variable " + name + " ranges over " + std::to_string(domain.size()) +
                                              " elements; subset enumeration is limited to 63");
        std::vector<std::int32_t> positions(s_.size(), -1);
        for (std::size_t i = 0; i < domain.size(); ++i) positions[domain[i]] = static_cast<std::int32_t>(i);
        set_positions_.push_back(std::move(positions));
        set_domains_.push_back(std::move(domain));
        scope_.push_back({name, {true, set_slots_}});
        return set_slots_++;
    }

    void unbind() { scope_.pop_back(); }

    std::unique_ptr<Node> compile(const Formula& f, FreeVars& free) {
        const FormulaNode& n = *f;
        auto node = std::make_unique<Node>();
        node->kind = n.kind;
        switch (n.kind) {
            case NodeKind::exists:
            case NodeKind::forall: {
                node->slot = bind_individual(n.name);
                FreeVars inner;
                node->kids.push_back(compile(n.children.at(0), inner));
                unbind();
                inner.individuals.erase(n.name);
                if (inner.sets.empty()) {
                    std::string signature;
                    for (const auto& v : inner.individuals) {
                        signature += v;
                        signature += ' ';
                        node->free_slots.push_back(lookup(v).slot);
                    }
                    auto& table = memos_[{f.get(), signature}];
                    if (!table) table = std::make_unique<MemoTable>();
                    node->memo = table.get();
                }
                merge(free, inner);
                break;
            }
            case NodeKind::exists_set:
            case NodeKind::forall_set: {
                node->slot = bind_set(n.name, set_domain(n));
                node->domain = set_domains_[node->slot];
                FreeVars inner;
                node->kids.push_back(compile(n.children.at(0), inner));
                unbind();
                inner.sets.erase(n.name);
                merge(free, inner);
                break;
            }
            case NodeKind::conjunction:
            case NodeKind::disjunction:
            case NodeKind::negation:
            case NodeKind::implication:
                for (const auto& c : n.children) node->kids.push_back(compile(c, free));
                break;
            case NodeKind::relation: {
                node->relation = s_.find(n.name);
                if (!node->relation) throw Error(ErrorKind::evaluation, "unknown relation " + n.name);
                if (node->relation->arity() != n.terms.size())
                    throw Error(ErrorKind::evaluation, "relation " + n.name + " has arity " + std::to_string(node->relation->arity()) +
                                                           ", used with " + std::to_string(n.terms.size()) + " arguments");
                for (const auto& t : n.terms) node->terms.push_back(term(t, free));
                break;
            }
            case NodeKind::equals:
            case NodeKind::same_v:
                for (const auto& t : n.terms) node->terms.push_back(term(t, free));
                break;
            case NodeKind::member: {
                auto b = lookup(n.name);
                if (!b.is_set) throw Error(ErrorKind::evaluation, n.name + " is not a set variable");
                node->slot = b.slot;
                free.sets.insert(n.name);
                node->terms.push_back(term(n.terms.at(0), free));
                break;
            }
        }
        return node;
    }

    std::uint32_t individual_slots() const { return individual_slots_; }
    const std::vector<std::vector<std::int32_t>>& set_positions() const { return set_positions_; }
    const std::vector<std::vector<ElementId>>& set_domains() const { return set_domains_; }

    bool bound(const std::string& name) const {
        return std::any_of(scope_.begin(), scope_.end(), [&](const auto& e) { return e.first == name; });
    }

private:
    static void merge(FreeVars& into, const FreeVars& from) {
        into.individuals.insert(from.individuals.begin(), from.individuals.end());
        into.sets.insert(from.sets.begin(), from.sets.end());
    }

    Binding lookup(const std::string& name) const {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
            if (it->first == name) return it->second;
        throw Error(ErrorKind::evaluation, "unbound variable " + name);
    }

    Term term(const std::string& name, FreeVars& free) {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
            if (it->first != name) continue;
            if (it->second.is_set) throw Error(ErrorKind::evaluation, name + " is a set variable, used as an element");
            free.individuals.insert(name);
            return {false, it->second.slot};
        }
        if (name == "s") {
            if (!s_.start()) throw Error(ErrorKind::evaluation, "constant s exists only in linear-time structures");
            return {true, *s_.start()};
        }
        if (name.size() > 1 && name[0] == '@') {
            Time t = static_cast<Time>(std::stoul(name.substr(1)));
            auto e = s_.time_element(t);
            if (!e) throw Error(ErrorKind::evaluation, "no time element for constant " + name);
            return {true, *e};
        }
        throw Error(ErrorKind::evaluation, "unbound variable " + name);
    }

    /// Elements a set quantifier has to range over: the unary relation named
    /// in a leading guard ∀y (y ∈ X → P y), else the whole universe.
    std::vector<ElementId> set_domain(const FormulaNode& q) const {
        const FormulaNode& body = *q.children.at(0);
        const FormulaNode* guard = nullptr;
        auto first_conjunct = [](const FormulaNode& f) -> const FormulaNode* {
            if (f.kind == NodeKind::conjunction && !f.children.empty()) return f.children.front().get();
            return &f;
        };
        if (q.kind == NodeKind::exists_set && body.kind == NodeKind::conjunction && !body.children.empty())
            guard = body.children.front().get();
        if (q.kind == NodeKind::forall_set && body.kind == NodeKind::implication) guard = first_conjunct(*body.children.at(0));

        if (guard && guard->kind == NodeKind::forall) {
            const FormulaNode& imp = *guard->children.at(0);
            if (imp.kind == NodeKind::implication) {
                const FormulaNode& in = *imp.children.at(0);
                const FormulaNode& p = *imp.children.at(1);
                if (in.kind == NodeKind::member && in.name == q.name && in.terms.at(0) == guard->name && p.kind == NodeKind::relation &&
                    p.terms.size() == 1 && p.terms[0] == guard->name) {
                    if (const Relation* r = s_.find(p.name); r && r->arity() == 1) {
                        std::vector<ElementId> out;
                        for (const auto& t : r->tuples()) out.push_back(t[0]);
                        return out;
                    }
                }
            }
        }
        std::vector<ElementId> all(s_.size());
        for (ElementId i = 0; i < s_.size(); ++i) all[i] = i;
        return all;
    }

    const RelationalStructure& s_;
    std::vector<std::pair<std::string, Binding>> scope_;
    std::uint32_t individual_slots_ = 0;
    std::uint32_t set_slots_ = 0;
    std::vector<std::vector<std::int32_t>> set_positions_;
    std::vector<std::vector<ElementId>> set_domains_;
    std::map<std::pair<const FormulaNode*, std::string>, std::unique_ptr<MemoTable>> memos_;
};

class Evaluator {
public:
    Evaluator(const RelationalStructure& s, const Compiler& c, std::vector<ElementId> individuals, std::vector<std::uint64_t> sets)
        : s_(s), positions_(c.set_positions()), individuals_(std::move(individuals)), sets_(std::move(sets)) {}

    bool eval(const Node& n) {
        switch (n.kind) {
            case NodeKind::exists:
            case NodeKind::forall: {
                std::vector<std::uint32_t> key;
                if (n.memo) {
                    key.reserve(n.free_slots.size());
                    for (auto slot : n.free_slots) key.push_back(individuals_[slot]);
                    if (auto it = n.memo->find(key); it != n.memo->end()) return it->second;
                }
                const bool want = n.kind == NodeKind::exists;
                bool result = !want;
                for (ElementId e = 0; e < s_.size(); ++e) {
                    individuals_[n.slot] = e;
                    if (eval(*n.kids[0]) == want) {
                        result = want;
                        break;
                    }
                }
                if (n.memo) n.memo->emplace(std::move(key), result);
                return result;
            }
            case NodeKind::exists_set:
            case NodeKind::forall_set: {
                const bool want = n.kind == NodeKind::exists_set;
                const std::uint64_t count = std::uint64_t{1} << n.domain.size();
                for (std::uint64_t mask = 0; mask < count; ++mask) {
                    sets_[n.slot] = mask;
                    if (eval(*n.kids[0]) == want) return want;
                }
                return !want;
            }
            case NodeKind::conjunction:
                for (const auto& k : n.kids)
                    if (!eval(*k)) return false;
                return true;
            case NodeKind::disjunction:
                for (const auto& k : n.kids)
                    if (eval(*k)) return true;
                return false;
            case NodeKind::negation: return !eval(*n.kids[0]);
            case NodeKind::implication: return !eval(*n.kids[0]) || eval(*n.kids[1]);
            case NodeKind::relation: {
                ElementId tuple[Relation::max_arity];
                for (std::size_t i = 0; i < n.terms.size(); ++i) tuple[i] = value(n.terms[i]);
                return n.relation->contains(std::span<const ElementId>(tuple, n.terms.size()));
            }
            case NodeKind::equals: return value(n.terms[0]) == value(n.terms[1]);
            case NodeKind::same_v: {
                auto a = s_.origin(value(n.terms[0]));
                auto b = s_.origin(value(n.terms[1]));
                return a && b && *a == *b;
            }
            case NodeKind::member: {
                auto p = positions_[n.slot][value(n.terms[0])];
                return p >= 0 && ((sets_[n.slot] >> p) & 1u);
            }
        }
        return false;
    }

private:
    ElementId value(const Term& t) const { return t.constant ? t.value : individuals_[t.value]; }

    const RelationalStructure& s_;
    const std::vector<std::vector<std::int32_t>>& positions_;
    std::vector<ElementId> individuals_;
    std::vector<std::uint64_t> sets_;
};

}  // namespace

bool model_check(const RelationalStructure& s, const Formula& f, const Assignment& assignment) {
    Compiler compiler(s);
    std::vector<std::pair<std::uint32_t, ElementId>> individual_values;
    std::vector<std::uint32_t> set_slots;
    for (const auto& [name, e] : assignment.individuals) {
        if (e >= s.size()) throw Error(ErrorKind::invalid_argument, "assignment of " + name + " is outside the universe");
        individual_values.push_back({compiler.bind_individual(name), e});
    }
    for (const auto& [name, elems] : assignment.sets) {
        std::vector<ElementId> dom = elems;
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
        for (auto e : dom)
            if (e >= s.size()) throw Error(ErrorKind::invalid_argument, "set " + name + " holds an element outside the universe");
        set_slots.push_back(compiler.bind_set(name, std::move(dom)));
    }
    FreeVars free;
    auto root = compiler.compile(f, free);

    std::vector<ElementId> individuals(compiler.individual_slots(), 0);
    for (const auto& [slot, e] : individual_values) individuals[slot] = e;
    std::vector<std::uint64_t> sets(compiler.set_domains().size(), 0);
    for (auto slot : set_slots) {
        const auto d = compiler.set_domains()[slot].size();
        sets[slot] = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
    }
    Evaluator ev(s, compiler, std::move(individuals), std::move(sets));
    return ev.eval(*root);
}

}  // namespace tempotw
