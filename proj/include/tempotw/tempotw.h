#ifndef TEMPOTW_H
#define TEMPOTW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef TEMPOTW_BUILDING
#    define TEMPOTW_API __declspec(dllexport)
#  else
#    define TEMPOTW_API __declspec(dllimport)
#  endif
#else
#  define TEMPOTW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns one of these; details via tw_last_error(). */
enum tw_status {
    TW_OK = 0,
    TW_ERR_SYNTAX = 1,
    TW_ERR_INVARIANT = 2,
    TW_ERR_INVALID_ARGUMENT = 3,
    TW_ERR_LIMIT = 4,
    TW_ERR_UNSUPPORTED = 5,
    TW_ERR_EVALUATION = 6,
    TW_ERR_IO = 7,
    TW_ERR_INTERNAL = 8
};

enum tw_variant { TW_LTW_PRESERVING = 0, TW_TW_PRESERVING = 1 };
enum tw_time_encoding { TW_CLIQUE_TIME = 0, TW_LINEAR_TIME = 1 };

typedef struct tw_dgraph tw_dgraph;     /* dynamic graph */
typedef struct tw_graph tw_graph;       /* static graph */
typedef struct tw_structure tw_structure;
typedef struct tw_td tw_td;             /* tree decomposition */
typedef struct tw_formula tw_formula;

/* Message of the last failed call on this thread ("" if none). */
TEMPOTW_API const char* tw_last_error(void);
/* Strings handed out through char** parameters are owned by the caller. */
TEMPOTW_API void tw_string_free(char* s);

/* dynamic graphs (.tgr) */
TEMPOTW_API int tw_dgraph_parse(const char* text, tw_dgraph** out);
TEMPOTW_API int tw_dgraph_load(const char* path, tw_dgraph** out);
TEMPOTW_API void tw_dgraph_free(tw_dgraph* g);
TEMPOTW_API int tw_dgraph_format(const tw_dgraph* g, char** out);
TEMPOTW_API size_t tw_dgraph_vertex_count(const tw_dgraph* g);
TEMPOTW_API size_t tw_dgraph_time_count(const tw_dgraph* g);
TEMPOTW_API int tw_dgraph_is_directed(const tw_dgraph* g);
/* *valid is 1 or 0; *report lists one violation per line. */
TEMPOTW_API int tw_dgraph_validate(const tw_dgraph* g, int* valid, char** report);
TEMPOTW_API int tw_dgraph_snapshot(const tw_dgraph* g, uint32_t t, tw_graph** out);
TEMPOTW_API int tw_dgraph_union(const tw_dgraph* g, tw_graph** out);

/* generators */
TEMPOTW_API int tw_gen_markov(size_t n, uint32_t tmax, double c1, double c2, double initial_density, uint64_t seed,
                              tw_dgraph** out);
TEMPOTW_API int tw_gen_ktree(size_t n, uint32_t tmax, unsigned k, double edge_keep, double vertex_death, uint64_t seed,
                             tw_dgraph** out);
TEMPOTW_API int tw_gen_bounded_degree(size_t n, uint32_t tmax, unsigned d, uint64_t seed, tw_dgraph** out);
TEMPOTW_API int tw_degree_stats(const tw_dgraph* g, char** csv);
TEMPOTW_API int tw_expected_next_degree(double d, size_t n, double p, double q, double* out);

/* static graphs (.gr) */
TEMPOTW_API int tw_graph_parse(const char* text, tw_graph** out);
TEMPOTW_API int tw_graph_load(const char* path, tw_graph** out);
TEMPOTW_API void tw_graph_free(tw_graph* g);
TEMPOTW_API int tw_graph_format(const tw_graph* g, char** out);
TEMPOTW_API size_t tw_graph_vertex_count(const tw_graph* g);
TEMPOTW_API size_t tw_graph_edge_count(const tw_graph* g);

/* relational structures */
TEMPOTW_API int tw_translate(const tw_dgraph* g, int variant, int time_encoding, tw_structure** out);
TEMPOTW_API void tw_structure_free(tw_structure* s);
TEMPOTW_API size_t tw_structure_size(const tw_structure* s);
TEMPOTW_API int tw_structure_format(const tw_structure* s, char** out);
/* 0-based element id from a tag such as "v3@2", "t2" or "s". */
TEMPOTW_API int tw_structure_find(const tw_structure* s, const char* tag, uint32_t* id);
TEMPOTW_API int tw_gaifman(const tw_structure* s, tw_graph** out);

/* tree decompositions (.td) */
TEMPOTW_API int tw_td_parse(const char* text, tw_td** out);
TEMPOTW_API int tw_td_load(const char* path, tw_td** out);
TEMPOTW_API void tw_td_free(tw_td* d);
TEMPOTW_API int tw_td_format(const tw_td* d, char** out);
TEMPOTW_API int tw_td_width(const tw_td* d, int* out);
TEMPOTW_API int tw_td_check(const tw_graph* g, const tw_td* d, int* valid, char** report);
/* decomposition may be NULL when only the width is wanted */
TEMPOTW_API int tw_exact_treewidth(const tw_graph* g, unsigned exact_limit, int* width, tw_td** decomposition);
TEMPOTW_API int tw_minfill(const tw_graph* g, tw_td** out);
TEMPOTW_API int tw_local_treewidth(const tw_graph* g, unsigned radius, unsigned exact_limit, int* out);
/* Decomposes every snapshot exactly, then lifts them into a decomposition of
   the Gaifman graph of the treewidth-preserving structure. */
TEMPOTW_API int tw_construct_decomposition(const tw_dgraph* g, int time_encoding, unsigned exact_limit, tw_td** out);

/* formulas */
TEMPOTW_API int tw_formula_parse(const char* text, tw_formula** out);
TEMPOTW_API void tw_formula_free(tw_formula* f);
TEMPOTW_API int tw_formula_format(const tw_formula* f, char** out);
TEMPOTW_API int tw_formula_is_first_order(const tw_formula* f);
/* Generated sentences; `g` supplies T(G). */
TEMPOTW_API int tw_formula_journey(unsigned n, int variant, int time_encoding, const tw_dgraph* g, tw_formula** out);
TEMPOTW_API int tw_formula_scdc(unsigned k, unsigned ell, int variant, int time_encoding, const tw_dgraph* g,
                                tw_formula** out);
TEMPOTW_API int tw_formula_smrp(unsigned k, int variant, int time_encoding, const tw_dgraph* g, tw_formula** out);
TEMPOTW_API int tw_formula_coloring(unsigned k, int evolving, tw_formula** out);
/* Free variables are bound through parallel arrays of names and 0-based element ids. */
TEMPOTW_API int tw_model_check(const tw_structure* s, const tw_formula* f, const char* const* names, const uint32_t* ids,
                               size_t count, int* result);

/* solvers; *yes is 1 or 0, *report holds RESULT/WITNESS/... lines */
TEMPOTW_API int tw_journey(const tw_dgraph* g, uint32_t source, uint32_t target, unsigned max_length, int* length);
TEMPOTW_API int tw_solve_scdc(const tw_dgraph* g, unsigned k, unsigned ell, int* yes, char** report);
TEMPOTW_API int tw_solve_smrp(const tw_dgraph* g, uint32_t v, unsigned k, int* yes, char** report);
TEMPOTW_API int tw_solve_permanent_coloring(const tw_dgraph* g, unsigned k, int* yes, char** report);
TEMPOTW_API int tw_solve_evolving_coloring(const tw_dgraph* g, unsigned k, int* yes, char** report);

/* theorem checks: "tw-bound", "ltw-bound", "linear-bound", "markov-degree" */
TEMPOTW_API int tw_verify(const char* theorem, unsigned trials, uint64_t seed, int* pass, char** report);

#ifdef __cplusplus
}
#endif

#endif
