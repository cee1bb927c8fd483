#include "tempotw/error.hpp"
#include "tempotw/logic.hpp"

namespace tempotw {

using namespace fo;

namespace {

std::string indexed(const std::string& stem, unsigned i) { return stem + std::to_string(i); }

}  // namespace

Formula depth_formula(unsigned level, const std::string& var) {
    if (level == 0) throw Error(ErrorKind::invalid_argument, "depth levels start at 1");
    if (level == 1) return atom(rel::order, {"s", var});
    const std::string prev = indexed("lvl", level - 1);
    return exists(prev, all({atom(rel::time, {prev}), atom(rel::order, {prev, var}), depth_formula(level - 1, prev)}));
}

Formula leq_formula(std::size_t time_count, const std::string& a, const std::string& b) {
    std::vector<Formula> cases{equals(a, b)};
    for (unsigned l = 1; l <= time_count; ++l)
        for (unsigned m = l + 1; m <= time_count; ++m) cases.push_back(all({depth_formula(l, a), depth_formula(m, b)}));
    return any(std::move(cases));
}

namespace {

Formula time_order(const TranslationConfig& cfg, std::size_t time_count, const std::string& earlier, const std::string& later) {
    if (cfg.time_encoding == TimeEncoding::linear) return leq_formula(time_count, earlier, later);
    return any({atom(rel::order, {earlier, later}), equals(earlier, later)});
}

/// One step of a journey and everything after it. Step i uses its own copy
/// pair (a_i, b_i) at time t_i; consecutive steps are linked through f_V.
Formula journey_steps(unsigned i, unsigned length, const TranslationConfig& cfg, std::span<const Time> times, const std::string& from,
                      const std::string& to) {
    const std::string a = indexed("a", i), b = indexed("b", i), t = indexed("t", i);
    const std::string prev = i == 1 ? from : indexed("b", i - 1);

    std::vector<Formula> at_time{atom(rel::time, {t})};
    if (cfg.variant == Variant::tw_preserving) {
        at_time.push_back(atom(rel::xi, {a, b, t}));
    } else {
        std::vector<Formula> live;
        for (Time c : times) live.push_back(all({equals(t, time_constant(c)), atom(rel::live_edge(c), {a, b})}));
        at_time.push_back(any(std::move(live)));
    }
    if (i > 1) at_time.push_back(time_order(cfg, times.size(), indexed("t", i - 1), t));
    at_time.push_back(i < length ? journey_steps(i + 1, length, cfg, times, from, to) : same_v(b, to));

    std::vector<Formula> edge_part{atom(rel::vertex, {b})};
    if (cfg.variant == Variant::ltw_preserving) edge_part.push_back(atom(rel::edge, {a, b}));
    edge_part.push_back(exists(t, all(std::move(at_time))));

    return exists(a, all({atom(rel::vertex, {a}), same_v(prev, a), exists(b, all(std::move(edge_part)))}));
}

}  // namespace

Formula journey_formula(unsigned n, const TranslationConfig& cfg, std::span<const Time> times, const std::string& u, const std::string& v) {
    Formula j = same_v(u, v);
    for (unsigned length = 1; length <= n; ++length) j = any({j, journey_steps(1, length, cfg, times, u, v)});
    return j;
}

Formula scdc_sentence(unsigned k, unsigned ell, const TranslationConfig& cfg, std::span<const Time> times) {
    if (k == 0) throw Error(ErrorKind::invalid_argument, "SCDC needs k >= 1");
    const Formula journey = journey_formula(ell, cfg, times, "x", "y");
    std::vector<Formula> pairs;
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j)
            if (i != j)
                pairs.push_back(forall("x", forall("y", implies(all({same_v("x", indexed("v", i)), same_v("y", indexed("v", j))}), journey))));
    Formula body = all(std::move(pairs));
    for (unsigned i = k; i >= 1; --i) {
        const std::string vi = indexed("v", i);
        std::vector<Formula> parts{atom(rel::vertex, {vi})};
        for (unsigned h = 1; h < i; ++h) parts.push_back(negate(same_v(indexed("v", h), vi)));
        parts.push_back(body);
        body = exists(vi, all(std::move(parts)));
    }
    return body;
}

Formula smrp_sentence(unsigned k, const TranslationConfig& cfg, std::span<const Time> times, const std::string& v) {
    Formula out_edge = cfg.variant == Variant::ltw_preserving
                           ? atom(rel::edge, {"w", "u"})
                           : exists("te", all({atom(rel::time, {"te"}), atom(rel::xi, {"w", "u", "te"})}));
    Formula back = exists("u'", all({same_v("u'", "u"), journey_formula(k, cfg, times, "u'", v)}));
    return forall("w", implies(same_v("w", v), forall("u", implies(all({atom(rel::vertex, {"u"}), out_edge}), back))));
}

namespace {

std::string colour(unsigned i) { return indexed("X", i); }

Formula guard(const std::string& set) { return forall("g", implies(member(set, "g"), atom(rel::vertex, {"g"}))); }

Formula consistent(const std::string& set) {
    return forall("p", forall("q", implies(all({same_v("p", "q"), member(set, "p")}), member(set, "q"))));
}

Formula disjoint(const std::string& a, const std::string& b) {
    return forall("g", negate(all({member(a, "g"), member(b, "g")})));
}

Formula exactly_one(unsigned k, const std::string& x) {
    std::vector<Formula> options;
    for (unsigned i = 1; i <= k; ++i) {
        std::vector<Formula> only{member(colour(i), x)};
        for (unsigned j = 1; j <= k; ++j)
            if (j != i) only.push_back(negate(member(colour(j), x)));
        options.push_back(all(std::move(only)));
    }
    return any(std::move(options));
}

/// Every copy has exactly one colour and no live edge at time `t` is
/// monochromatic. `t` is bound by the caller or by a ∀ here when empty.
Formula proper_colouring(unsigned k, const std::string& t_bound) {
    std::vector<Formula> clash;
    for (unsigned i = 1; i <= k; ++i) clash.push_back(negate(all({member(colour(i), "x"), member(colour(i), "y")})));
    Formula premise = all({atom(rel::vertex, {"x"}), atom(rel::vertex, {"y"}), atom(rel::time, {"t"}), atom(rel::xi, {"x", "y", "t"})});
    Formula edges = implies(premise, all(std::move(clash)));
    Formula over_pairs = t_bound.empty() ? forall("x", forall("y", forall("t", edges))) : forall("x", forall("y", edges));
    return all({forall("x", implies(atom(rel::vertex, {"x"}), exactly_one(k, "x"))), over_pairs});
}

Formula colour_classes(unsigned k, bool consistency, Formula core) {
    Formula body = std::move(core);
    for (unsigned i = k; i >= 1; --i) {
        std::vector<Formula> parts{guard(colour(i))};
        if (consistency) parts.push_back(consistent(colour(i)));
        for (unsigned h = 1; h < i; ++h) parts.push_back(disjoint(colour(h), colour(i)));
        parts.push_back(body);
        body = exists_set(colour(i), all(std::move(parts)));
    }
    return body;
}

}  // namespace

Formula permanent_coloring_sentence(unsigned k, bool consistent) {
    if (k == 0) throw Error(ErrorKind::invalid_argument, "colouring needs k >= 1");
    return colour_classes(k, consistent, proper_colouring(k, ""));
}

Formula evolving_coloring_sentence(unsigned k) {
    if (k == 0) throw Error(ErrorKind::invalid_argument, "colouring needs k >= 1");
    return forall("t", implies(atom(rel::time, {"t"}), colour_classes(k, false, proper_colouring(k, "t"))));
}

}  // namespace tempotw
