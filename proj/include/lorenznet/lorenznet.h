#ifndef LORENZNET_H
#define LORENZNET_H

/*
 * C interface to the lorenznet library. Graphs are opaque handles; every
 * fallible call returns an ln_status and writes results through out
 * parameters. Strings handed back through char** are heap allocated and must
 * be released with ln_string_free. On failure ln_last_error() describes the
 * most recent error raised on the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(LORENZNET_BUILDING_LIBRARY)
#define LN_API __attribute__((visibility("default")))
#else
#define LN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ln_graph ln_graph;

typedef enum ln_status {
  LN_OK = 0,
  LN_ERR_INVALID_ARGUMENT = 1,
  LN_ERR_PARSE = 2,
  LN_ERR_DISCONNECTED = 3,
  LN_ERR_OUT_OF_RANGE = 4,
  LN_ERR_UNKNOWN_ID = 5,
  LN_ERR_LENGTH_MISMATCH = 6,
  LN_ERR_BUFFER_TOO_SMALL = 7,
  LN_ERR_INTERNAL = 8
} ln_status;

typedef enum ln_relation {
  LN_RELATION_EQUAL = 0,
  LN_RELATION_LESS = 1,
  LN_RELATION_GREATER = 2,
  LN_RELATION_INCOMPARABLE = 3
} ln_relation;

typedef enum ln_array_kind {
  LN_ARRAY_DELTA = 0,
  LN_ARRAY_ALPHA = 1,
  LN_ARRAY_GAMMA = 2
} ln_array_kind;

typedef enum ln_grid_axis {
  LN_AXIS_NODES = 0, /* grid values are node counts N */
  LN_AXIS_M = 1      /* grid values are the family parameter M */
} ln_grid_axis;

LN_API const char* ln_version(void);
LN_API const char* ln_status_name(ln_status status);
LN_API const char* ln_last_error(void);
LN_API void ln_string_free(char* s);

/* Graph construction. */
LN_API ln_status ln_graph_parse(const char* text, size_t length, ln_graph** out);
/* endpoints holds 2 * edge_count node indices in [0, n). */
LN_API ln_status ln_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count,
                                     ln_graph** out);
LN_API ln_status ln_graph_from_catalog(const char* id, ln_graph** out);
/* size is N or M depending on the family; a and b are read by s1 and s2 only. */
LN_API ln_status ln_graph_from_family(const char* kind, int64_t size, int64_t a, int64_t b,
                                      ln_graph** out);
LN_API void ln_graph_free(ln_graph* g);
/* Maps a node count to the family's size parameter (M for M-parameterized
 * families, N otherwise); fails with a message naming the violated constraint. */
LN_API ln_status ln_family_size_for_nodes(const char* kind, int64_t a, int64_t b, int64_t nodes,
                                          int64_t* size);
/* Non-zero when the family is parameterized by M rather than N. */
LN_API ln_status ln_family_uses_m(const char* kind, int* out);

/* Graph queries. */
LN_API size_t ln_graph_node_count(const ln_graph* g);
LN_API size_t ln_graph_edge_count(const ln_graph* g);
LN_API ln_status ln_graph_is_connected(const ln_graph* g, int* out);
LN_API ln_status ln_graph_is_tree(const ln_graph* g, int* out);
LN_API ln_status ln_graph_triangle_count(const ln_graph* g, uint64_t* out);
LN_API ln_status ln_graph_neighboring_index(const ln_graph* g, int64_t* out);
/* Writes the array into out when capacity allows; *length always receives
 * the full size. Returns LN_ERR_BUFFER_TOO_SMALL when capacity < *length. */
LN_API ln_status ln_graph_array(const ln_graph* g, ln_array_kind kind, int64_t* out,
                                size_t capacity, size_t* length);
LN_API ln_status ln_graph_edge_list(const ln_graph* g, char** out);

/* Reports. */
LN_API ln_status ln_analyze_json(const ln_graph* g, char** out);
LN_API ln_status ln_compare_json(const ln_graph* first, const ln_graph* second, char** out);
/* kind must be LN_ARRAY_DELTA or LN_ARRAY_GAMMA. */
LN_API ln_status ln_lorenz_csv(const ln_graph* g, ln_array_kind kind, char** out);

/* Generalized majorization of two decreasing non-negative arrays. */
LN_API ln_status ln_majorize_compare(const double* x, size_t x_length, const double* y,
                                     size_t y_length, ln_relation* relation, int* strict);

/* Growth report for a family; grid == NULL selects the default grid.
 * csv != 0 renders the rows as CSV instead of the JSON report. */
LN_API ln_status ln_family_report(const char* kind, int64_t a, int64_t b, ln_grid_axis axis,
                                  const int64_t* grid, size_t grid_length, int csv, char** out);

LN_API ln_status ln_catalog_list_json(char** out);
LN_API ln_status ln_catalog_emit(const char* id, char** out);

/* Runs the fixture suite (only == NULL runs every group). */
LN_API ln_status ln_verify_json(const char* only, size_t tree_max_n, char** out,
                                size_t* failures, size_t* flagged);

#ifdef __cplusplus
}
#endif

#endif /* LORENZNET_H */
