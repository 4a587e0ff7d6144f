#ifndef SGC_H
#define SGC_H

#include <stddef.h>
#include <stdint.h>

#if defined(SGC_BUILDING)
#define SGC_API __attribute__((visibility("default")))
#else
#define SGC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgc_status {
    SGC_OK = 0,
    SGC_ERR_PARSE = 1,
    SGC_ERR_DOMAIN = 2,
    SGC_ERR_MISMATCH = 3,
    SGC_ERR_UNCOLORABLE = 4,
    SGC_ERR_CAPACITY = 5,
    SGC_ERR_MALFORMED = 6,
    SGC_ERR_CORRUPT_CERTIFICATE = 7,
    SGC_ERR_NOT_REFINABLE = 8,
    SGC_ERR_SHAPE = 9,
    SGC_ERR_INTERNAL = 10,
    SGC_ERR_IO = 11,
    SGC_ERR_ARGUMENT = 12
} sgc_status;

typedef enum sgc_verdict {
    SGC_FEASIBLE = 0,
    SGC_INFEASIBLE = 1,
    SGC_UNKNOWN = 2
} sgc_verdict;

typedef struct sgc_graph sgc_graph;
typedef struct sgc_coloring sgc_coloring;
typedef struct sgc_chi sgc_chi;

/* Message for the last failing call on this thread. */
SGC_API const char* sgc_last_error(void);
/* Line number of the last parse error, 0 if none. */
SGC_API int sgc_last_error_line(void);

SGC_API void sgc_string_free(char* s);

/* Graphs. Signs are +1 / -1. */
SGC_API sgc_status sgc_graph_new(int n, sgc_graph** out);
SGC_API void sgc_graph_free(sgc_graph* g);
SGC_API sgc_status sgc_graph_add_edge(sgc_graph* g, int u, int v, int sign);
SGC_API int sgc_graph_vertex_count(const sgc_graph* g);
SGC_API int sgc_graph_edge_count(const sgc_graph* g);
SGC_API sgc_status sgc_graph_edge(const sgc_graph* g, int index, int* u, int* v, int* sign);
SGC_API sgc_status sgc_graph_parse(const char* text, sgc_graph** out);
SGC_API sgc_status sgc_graph_load(const char* path, sgc_graph** out);
/* Canonical .sg text including any vertex names. */
SGC_API sgc_status sgc_graph_render(const sgc_graph* g, char** text);
SGC_API sgc_status sgc_graph_save(const sgc_graph* g, const char* path);

/* Named constructions. terminal_u / terminal_v receive -1 for non-indicators. */
SGC_API sgc_status sgc_generate(const char* name, const int64_t* params, size_t nparams, sgc_graph** out,
                                int* terminal_u, int* terminal_v);
/* Explicit coloring shipped with a construction, if any (big-gamma, k4-omega). */
SGC_API sgc_status sgc_generate_coloring(const char* name, sgc_coloring** out);

/* Colorings (p, q, one color per vertex). */
SGC_API sgc_status sgc_coloring_new(int64_t p, int64_t q, size_t n, sgc_coloring** out);
SGC_API void sgc_coloring_free(sgc_coloring* c);
SGC_API int64_t sgc_coloring_p(const sgc_coloring* c);
SGC_API int64_t sgc_coloring_q(const sgc_coloring* c);
SGC_API size_t sgc_coloring_size(const sgc_coloring* c);
SGC_API int64_t sgc_coloring_get(const sgc_coloring* c, size_t vertex);
SGC_API sgc_status sgc_coloring_set(sgc_coloring* c, size_t vertex, int64_t color);
SGC_API sgc_status sgc_coloring_parse(const char* text, sgc_coloring** out);
SGC_API sgc_status sgc_coloring_load(const char* path, sgc_coloring** out);
SGC_API sgc_status sgc_coloring_render(const sgc_coloring* c, char** text);
SGC_API sgc_status sgc_coloring_save(const sgc_coloring* c, const char* path);

/* Rationals are reported as text: "a/b" in lowest terms, plus " (p/q)" for the even form when different. */
SGC_API sgc_status sgc_format_rational(int64_t num, int64_t den, char** text);
/* Parses "a/b" into the even normal form (p even, value >= 2). */
SGC_API sgc_status sgc_parse_circumference(const char* text, int64_t* p, int64_t* q);

SGC_API sgc_status sgc_verify(const sgc_graph* g, const sgc_coloring* c, int* ok);
SGC_API sgc_status sgc_feasible(const sgc_graph* g, int64_t p, int64_t q, const int* pin_vertices,
                                const int64_t* pin_colors, size_t npins, uint64_t node_budget,
                                sgc_verdict* verdict, sgc_coloring** witness);

/* chi_c. node_budget 0 means unlimited. */
SGC_API sgc_status sgc_chi_compute(const sgc_graph* g, uint64_t node_budget, sgc_chi** out);
SGC_API void sgc_chi_free(sgc_chi* r);
/* 1 when the graph has no edge (value 1). */
SGC_API int sgc_chi_edgeless(const sgc_chi* r);
SGC_API int sgc_chi_exact(const sgc_chi* r);
SGC_API void sgc_chi_value(const sgc_chi* r, int64_t* p, int64_t* q);
/* Returns 0 when absent. */
SGC_API int sgc_chi_refuted(const sgc_chi* r, int64_t* p, int64_t* q);
SGC_API int sgc_chi_undecided(const sgc_chi* r, int64_t* p, int64_t* q);
SGC_API uint64_t sgc_chi_nodes(const sgc_chi* r);
/* Copy of the witness coloring; NULL for edgeless graphs. */
SGC_API sgc_coloring* sgc_chi_witness(const sgc_chi* r);

/* Tight-cycle certificate text for a coloring at an optimum. */
SGC_API sgc_status sgc_certify(const sgc_graph* g, const sgc_coloring* c, char** text);
/* Refines a coloring with an acyclic tight digraph; text holds the rational coloring. */
SGC_API sgc_status sgc_refine(const sgc_graph* g, const sgc_coloring* c, char** text);

/* Membership table for d = 0..p/2, entries are sgc_verdict values; table needs p/2+1 slots. */
SGC_API sgc_status sgc_zset(const sgc_graph* g, int u, int v, int64_t p, int64_t q, uint64_t node_budget,
                            int* table);

SGC_API sgc_status sgc_switching_equivalent(const sgc_graph* a, const sgc_graph* b, int* equivalent);
SGC_API sgc_status sgc_is_balanced(const sgc_graph* g, int* balanced);
/* g00, g01, g10, g11; -1 means infinite. */
SGC_API sgc_status sgc_girth_types(const sgc_graph* g, int64_t out[4]);
SGC_API sgc_status sgc_degeneracy(const sgc_graph* g, int* d);
SGC_API sgc_status sgc_chi_plus(const sgc_graph* g, int* out);
/* Signed circular chromatic number; *edgeless is set for graphs without edges. */
SGC_API sgc_status sgc_chi_s(const sgc_graph* g, int64_t* p, int64_t* q, int* edgeless);

#ifdef __cplusplus
}
#endif

#endif
