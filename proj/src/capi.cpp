#include "tempotw/tempotw.h"

#include "tempotw/decomposition.hpp"
#include "tempotw/error.hpp"
#include "tempotw/generators.hpp"
#include "tempotw/logic.hpp"
#include "tempotw/solvers.hpp"
#include "tempotw/structures.hpp"
#include "tempotw/temporal_graph.hpp"
#include "tempotw/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>

using namespace tempotw;

struct tw_dgraph {
    DynamicGraph g;
};
struct tw_graph {
    StaticGraph g;
};
struct tw_structure {
    RelationalStructure s;
};
struct tw_td {
    TreeDecomposition d;
};
struct tw_formula {
    Formula f;
};

namespace {

thread_local std::string last_error;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int status_of(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::syntax: return TW_ERR_SYNTAX;
        case ErrorKind::invariant: return TW_ERR_INVARIANT;
        case ErrorKind::invalid_argument: return TW_ERR_INVALID_ARGUMENT;
        case ErrorKind::limit: return TW_ERR_LIMIT;
        case ErrorKind::unsupported: return TW_ERR_UNSUPPORTED;
        case ErrorKind::evaluation: return TW_ERR_EVALUATION;
    }
    return TW_ERR_INTERNAL;
}

int fail(int status, const char* message) {
    last_error = message;
    return status;
}

template <typename F>
int guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return TW_OK;
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const IoError& e) {
        return fail(TW_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TW_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TW_ERR_INTERNAL, e.what());
    }
}

void need(const void* p, const char* what) {
    if (!p) throw Error(ErrorKind::invalid_argument, std::string("null ") + what);
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put_string(char** out, const std::string& s) {
    if (out) *out = copy_string(s);
}

std::string slurp(const char* path) {
    need(path, "path");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(std::string("cannot open ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Variant variant_of(int v) {
    if (v == TW_LTW_PRESERVING) return Variant::ltw_preserving;
    if (v == TW_TW_PRESERVING) return Variant::tw_preserving;
    throw Error(ErrorKind::invalid_argument, "unknown variant");
}

TimeEncoding encoding_of(int e) {
    if (e == TW_CLIQUE_TIME) return TimeEncoding::clique;
    if (e == TW_LINEAR_TIME) return TimeEncoding::linear;
    throw Error(ErrorKind::invalid_argument, "unknown time encoding");
}

TranslationConfig config_of(int variant, int encoding) {
    return {variant_of(variant), encoding_of(encoding)};
}

template <typename Handle, typename Value>
void hand_out(Handle** out, Value&& v) {
    need(out, "output");
    *out = new Handle{std::forward<Value>(v)};
}

}  // namespace

extern "C" {

const char* tw_last_error(void) { return last_error.c_str(); }

void tw_string_free(char* s) { std::free(s); }

int tw_dgraph_parse(const char* text, tw_dgraph** out) {
    return guarded([&] {
        need(text, "text");
        hand_out(out, load_tgr(text));
    });
}

int tw_dgraph_load(const char* path, tw_dgraph** out) {
    return guarded([&] { hand_out(out, load_tgr(slurp(path))); });
}

void tw_dgraph_free(tw_dgraph* g) { delete g; }

int tw_dgraph_format(const tw_dgraph* g, char** out) {
    return guarded([&] {
        need(g, "graph");
        put_string(out, format_tgr(g->g));
    });
}

size_t tw_dgraph_vertex_count(const tw_dgraph* g) { return g ? g->g.vertex_count() : 0; }
size_t tw_dgraph_time_count(const tw_dgraph* g) { return g ? g->g.time().times.size() : 0; }
int tw_dgraph_is_directed(const tw_dgraph* g) { return g && g->g.directed() ? 1 : 0; }

int tw_dgraph_validate(const tw_dgraph* g, int* valid, char** report) {
    return guarded([&] {
        need(g, "graph");
        std::string lines;
        const auto violations = validate(g->g);
        for (const auto& v : violations) lines += v.message + "\n";
        if (valid) *valid = violations.empty() ? 1 : 0;
        put_string(report, lines);
    });
}

int tw_dgraph_snapshot(const tw_dgraph* g, uint32_t t, tw_graph** out) {
    return guarded([&] {
        need(g, "graph");
        if (!g->g.time().contains(t)) throw Error(ErrorKind::invalid_argument, "time " + std::to_string(t) + " not in T");
        hand_out(out, snapshot(g->g, t));
    });
}

int tw_dgraph_union(const tw_dgraph* g, tw_graph** out) {
    return guarded([&] {
        need(g, "graph");
        hand_out(out, union_graph(g->g));
    });
}

int tw_gen_markov(size_t n, uint32_t tmax, double c1, double c2, double initial_density, uint64_t seed, tw_dgraph** out) {
    return guarded([&] {
        MarkovParams p;
        p.n = n;
        p.tmax = tmax;
        p.c1 = c1;
        p.c2 = c2;
        p.initial_density = initial_density;
        p.seed = seed;
        hand_out(out, gen_edge_markovian(p));
    });
}

int tw_gen_ktree(size_t n, uint32_t tmax, unsigned k, double edge_keep, double vertex_death, uint64_t seed,
                 tw_dgraph** out) {
    return guarded([&] {
        KtreeOptions options;
        options.edge_keep = edge_keep;
        options.vertex_death = vertex_death;
        hand_out(out, gen_snapshot_ktree(n, tmax, k, seed, options).first);
    });
}

int tw_gen_bounded_degree(size_t n, uint32_t tmax, unsigned d, uint64_t seed, tw_dgraph** out) {
    return guarded([&] { hand_out(out, gen_bounded_degree(n, tmax, d, seed)); });
}

int tw_degree_stats(const tw_dgraph* g, char** csv) {
    return guarded([&] {
        need(g, "graph");
        put_string(csv, format_degree_stats(degree_stats(g->g)));
    });
}

int tw_expected_next_degree(double d, size_t n, double p, double q, double* out) {
    return guarded([&] {
        need(out, "output");
        *out = expected_next_degree(d, n, p, q);
    });
}

int tw_graph_parse(const char* text, tw_graph** out) {
    return guarded([&] {
        need(text, "text");
        hand_out(out, parse_gr(text));
    });
}

int tw_graph_load(const char* path, tw_graph** out) {
    return guarded([&] { hand_out(out, parse_gr(slurp(path))); });
}

void tw_graph_free(tw_graph* g) { delete g; }

int tw_graph_format(const tw_graph* g, char** out) {
    return guarded([&] {
        need(g, "graph");
        put_string(out, format_gr(g->g));
    });
}

size_t tw_graph_vertex_count(const tw_graph* g) { return g ? g->g.vertex_count() : 0; }
size_t tw_graph_edge_count(const tw_graph* g) { return g ? g->g.edge_count() : 0; }

int tw_translate(const tw_dgraph* g, int variant, int time_encoding, tw_structure** out) {
    return guarded([&] {
        need(g, "graph");
        hand_out(out, translate(g->g, config_of(variant, time_encoding)));
    });
}

void tw_structure_free(tw_structure* s) { delete s; }
size_t tw_structure_size(const tw_structure* s) { return s ? s->s.size() : 0; }

int tw_structure_format(const tw_structure* s, char** out) {
    return guarded([&] {
        need(s, "structure");
        put_string(out, format_structure(s->s));
    });
}

int tw_structure_find(const tw_structure* s, const char* tag, uint32_t* id) {
    return guarded([&] {
        need(s, "structure");
        need(tag, "tag");
        need(id, "output");
        const auto& u = s->s.universe();
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i].tag() == tag) {
                *id = static_cast<uint32_t>(i);
                return;
            }
        }
        throw Error(ErrorKind::invalid_argument, std::string("no element tagged ") + tag);
    });
}

int tw_gaifman(const tw_structure* s, tw_graph** out) {
    return guarded([&] {
        need(s, "structure");
        hand_out(out, gaifman(s->s));
    });
}

int tw_td_parse(const char* text, tw_td** out) {
    return guarded([&] {
        need(text, "text");
        hand_out(out, parse_td(text));
    });
}

int tw_td_load(const char* path, tw_td** out) {
    return guarded([&] { hand_out(out, parse_td(slurp(path))); });
}

void tw_td_free(tw_td* d) { delete d; }

int tw_td_format(const tw_td* d, char** out) {
    return guarded([&] {
        need(d, "decomposition");
        put_string(out, format_td(d->d));
    });
}

int tw_td_width(const tw_td* d, int* out) {
    return guarded([&] {
        need(d, "decomposition");
        need(out, "output");
        *out = width(d->d);
    });
}

int tw_td_check(const tw_graph* g, const tw_td* d, int* valid, char** report) {
    return guarded([&] {
        need(g, "graph");
        need(d, "decomposition");
        const auto violations = check_decomposition(g->g, d->d);
        std::string lines;
        for (const auto& v : violations) lines += v.message + "\n";
        if (valid) *valid = violations.empty() ? 1 : 0;
        put_string(report, lines);
    });
}

int tw_exact_treewidth(const tw_graph* g, unsigned exact_limit, int* w, tw_td** decomposition) {
    return guarded([&] {
        need(g, "graph");
        auto result = exact_treewidth(g->g, exact_limit);
        if (w) *w = result.width;
        if (decomposition) *decomposition = new tw_td{std::move(result.decomposition)};
    });
}

int tw_minfill(const tw_graph* g, tw_td** out) {
    return guarded([&] {
        need(g, "graph");
        hand_out(out, minfill_decomposition(g->g));
    });
}

int tw_local_treewidth(const tw_graph* g, unsigned radius, unsigned exact_limit, int* out) {
    return guarded([&] {
        need(g, "graph");
        need(out, "output");
        *out = local_treewidth(g->g, radius, exact_limit);
    });
}

int tw_construct_decomposition(const tw_dgraph* g, int time_encoding, unsigned exact_limit, tw_td** out) {
    return guarded([&] {
        need(g, "graph");
        const TimeEncoding encoding = encoding_of(time_encoding);
        SnapshotDecompositions parts;
        for (Time t : g->g.time().times) parts.emplace(t, exact_treewidth(snapshot(g->g, t), exact_limit).decomposition);
        hand_out(out, encoding == TimeEncoding::clique ? build_clique_time_decomposition(g->g, parts)
                                                       : build_linear_time_decomposition(g->g, parts));
    });
}

int tw_formula_parse(const char* text, tw_formula** out) {
    return guarded([&] {
        need(text, "text");
        hand_out(out, parse_formula(text));
    });
}

void tw_formula_free(tw_formula* f) { delete f; }

int tw_formula_format(const tw_formula* f, char** out) {
    return guarded([&] {
        need(f, "formula");
        put_string(out, print_formula(f->f));
    });
}

int tw_formula_is_first_order(const tw_formula* f) { return f && is_first_order(f->f) ? 1 : 0; }

int tw_formula_journey(unsigned n, int variant, int time_encoding, const tw_dgraph* g, tw_formula** out) {
    return guarded([&] {
        need(g, "graph");
        hand_out(out, journey_formula(n, config_of(variant, time_encoding), g->g.time().times));
    });
}

int tw_formula_scdc(unsigned k, unsigned ell, int variant, int time_encoding, const tw_dgraph* g, tw_formula** out) {
    return guarded([&] {
        need(g, "graph");
        hand_out(out, scdc_sentence(k, ell, config_of(variant, time_encoding), g->g.time().times));
    });
}

int tw_formula_smrp(unsigned k, int variant, int time_encoding, const tw_dgraph* g, tw_formula** out) {
    return guarded([&] {
        need(g, "graph");
        hand_out(out, smrp_sentence(k, config_of(variant, time_encoding), g->g.time().times));
    });
}

int tw_formula_coloring(unsigned k, int evolving, tw_formula** out) {
    return guarded([&] { hand_out(out, evolving ? evolving_coloring_sentence(k) : permanent_coloring_sentence(k)); });
}

int tw_model_check(const tw_structure* s, const tw_formula* f, const char* const* names, const uint32_t* ids, size_t count,
                   int* result) {
    return guarded([&] {
        need(s, "structure");
        need(f, "formula");
        need(result, "output");
        Assignment a;
        if (count > 0) {
            need(names, "names");
            need(ids, "ids");
        }
        for (size_t i = 0; i < count; ++i) {
            need(names[i], "name");
            if (ids[i] >= s->s.size()) throw Error(ErrorKind::invalid_argument, "element id out of range");
            a.individuals[names[i]] = ids[i];
        }
        *result = model_check(s->s, f->f, a) ? 1 : 0;
    });
}

int tw_journey(const tw_dgraph* g, uint32_t source, uint32_t target, unsigned max_length, int* length) {
    return guarded([&] {
        need(g, "graph");
        need(length, "output");
        const auto found = shortest_journey(g->g, {source, target, max_length});
        *length = found ? static_cast<int>(*found) : -1;
    });
}

int tw_solve_scdc(const tw_dgraph* g, unsigned k, unsigned ell, int* yes, char** report) {
    return guarded([&] {
        need(g, "graph");
        const auto witness = scdc(g->g, k, ell);
        if (yes) *yes = witness ? 1 : 0;
        put_string(report, format_scdc_report(witness));
    });
}

int tw_solve_smrp(const tw_dgraph* g, uint32_t v, unsigned k, int* yes, char** report) {
    return guarded([&] {
        need(g, "graph");
        const auto r = smrp(g->g, v, k);
        if (yes) *yes = r.ok ? 1 : 0;
        put_string(report, format_smrp_report(r));
    });
}

int tw_solve_permanent_coloring(const tw_dgraph* g, unsigned k, int* yes, char** report) {
    return guarded([&] {
        need(g, "graph");
        const auto colors = permanent_coloring(g->g, k);
        if (yes) *yes = colors ? 1 : 0;
        put_string(report, format_permanent_report(colors));
    });
}

int tw_solve_evolving_coloring(const tw_dgraph* g, unsigned k, int* yes, char** report) {
    return guarded([&] {
        need(g, "graph");
        const auto colors = evolving_coloring(g->g, k);
        if (yes) *yes = colors ? 1 : 0;
        put_string(report, format_evolving_report(colors));
    });
}

int tw_verify(const char* theorem, unsigned trials, uint64_t seed, int* pass, char** report) {
    return guarded([&] {
        need(theorem, "theorem");
        const auto r = verify(parse_theorem(theorem), trials, seed);
        if (pass) *pass = r.ok() ? 1 : 0;
        put_string(report, format_verify_report(r));
    });
}

}  // extern "C"
