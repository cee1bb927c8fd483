#pragma once

#include "tempotw/structures.hpp"

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tempotw {

enum class NodeKind {
    exists,
    forall,
    exists_set,
    forall_set,
    conjunction,  // n-ary; empty conjunction is true
    disjunction,  // n-ary; empty disjunction is false
    negation,
    implication,
    relation,
    equals,
    same_v,  // f_V(x) = f_V(y)
    member,  // x ∈ X
};

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

/// FO/MSO syntax tree. `name` is the bound variable of a quantifier, the
/// relation name of an atom, or the set variable of a membership test.
/// Terms are variable names or the constants `s` and `@<time>`.
struct FormulaNode {
    NodeKind kind;
    std::string name;
    std::vector<std::string> terms;
    std::vector<Formula> children;
};

namespace fo {
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);
Formula exists_set(std::string var, Formula body);
Formula forall_set(std::string var, Formula body);
Formula all(std::vector<Formula> parts);
Formula any(std::vector<Formula> parts);
Formula negate(Formula f);
Formula implies(Formula premise, Formula conclusion);
Formula atom(std::string relation, std::vector<std::string> args);
Formula equals(std::string a, std::string b);
Formula same_v(std::string a, std::string b);
Formula member(std::string set, std::string element);
/// Term naming the time element of t.
std::string time_constant(Time t);
}  // namespace fo

/// S-expression text: `(exists x (V x))`, `(and ...)`, `(in X x)`, `(sameV x y)`.
std::string print_formula(const Formula& f);

/// Throws Error(syntax) with line:column on malformed input. Relation names
/// are not checked here; that happens against a structure at evaluation.
Formula parse_formula(std::string_view text);

bool is_first_order(const Formula& f);
std::size_t formula_size(const Formula& f);
bool same_formula(const Formula& a, const Formula& b);

struct Assignment {
    std::map<std::string, ElementId> individuals;
    std::map<std::string, std::vector<ElementId>> sets;
};

/// Brute-force evaluation: individual quantifiers range over the universe,
/// set quantifiers over all subsets of their domain (the whole universe, or
/// the unary relation P when the body starts with the guard ∀y (y ∈ X → P y)).
/// Quantified subformulas without free set variables are memoised on the
/// values of their free variables.
bool model_check(const RelationalStructure& s, const Formula& f, const Assignment& assignment = {});

// Formula generators for the temporal problems.

/// d_level(var): var is the level-th time in the linear order (LinearTime only).
Formula depth_formula(unsigned level, const std::string& var);

/// a ≤ b over time elements of a LinearTime structure with `time_count` times.
Formula leq_formula(std::size_t time_count, const std::string& a, const std::string& b);

/// J_n(u, v): a journey of at most n edges at non-decreasing times from a
/// copy of f_V(u) to a copy of f_V(v). `times` is T(G).
Formula journey_formula(unsigned n, const TranslationConfig& cfg, std::span<const Time> times, const std::string& u = "u",
                        const std::string& v = "v");

/// Strongly connected dynamic component: k copies of pairwise-distinct vertices,
/// every ordered pair joined by J_ell.
Formula scdc_sentence(unsigned k, unsigned ell, const TranslationConfig& cfg, std::span<const Time> times);

/// Short message return path, free variable `v`: every out-neighbour (at any
/// time) of v has a journey of length at most k back to v.
Formula smrp_sentence(unsigned k, const TranslationConfig& cfg, std::span<const Time> times, const std::string& v = "v");

/// MSO colouring sentences over the treewidth-preserving structure.
/// With `consistent`, copies of one vertex must share their colour.
Formula permanent_coloring_sentence(unsigned k, bool consistent = true);
Formula evolving_coloring_sentence(unsigned k);

}  // namespace tempotw
