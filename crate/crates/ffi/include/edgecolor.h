#ifndef EDGECOLOR_H
#define EDGECOLOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EcStatus {
  EC_STATUS_OK = 0,
  EC_STATUS_NULL_POINTER = 1,
  EC_STATUS_INVALID_ARGUMENT = 2,
  EC_STATUS_PARSE_ERROR = 3,
  EC_STATUS_TOO_LARGE = 4,
  EC_STATUS_INTERNAL = 5,
} EcStatus;

/**
 * Opaque edge coloring handle.
 */
typedef struct EcColoring EcColoring;

/**
 * Opaque graph handle.
 */
typedef struct EcGraph EcGraph;

typedef struct EcVerdict {
  bool proper;
  bool complete;
  bool bound_ok;
  size_t colors_used;
  size_t palette;
} EcVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread, or NULL. The pointer is
 * valid until the next failing call on the same thread.
 */
const char *ec_last_error_message(void);

/**
 * Builds a graph on `n` vertices from `m` edges given as `2 * m` vertex ids
 * (`u0, v0, u1, v1, ...`). `edges` may be NULL when `m == 0`.
 */
enum EcStatus ec_graph_new(size_t n, const uint32_t *edges, size_t m, struct EcGraph **out);

/**
 * Parses DIMACS `p edge` text.
 */
enum EcStatus ec_graph_parse_dimacs(const char *text, struct EcGraph **out);

/**
 * Generates a named family, e.g. `"petersen"`, `"cycle 5"`, `"gnp 10 0.5"`.
 */
enum EcStatus ec_graph_generate(const char *family, uint64_t seed, struct EcGraph **out);

void ec_graph_free(struct EcGraph *g);

/**
 * Vertex count; 0 for NULL.
 */
size_t ec_graph_vertex_count(const struct EcGraph *g);

/**
 * Edge count; 0 for NULL.
 */
size_t ec_graph_edge_count(const struct EcGraph *g);

/**
 * Maximum degree; 0 for NULL.
 */
size_t ec_graph_max_degree(const struct EcGraph *g);

/**
 * Runs the coloring algorithm with palette `max_degree + 1`.
 */
enum EcStatus ec_color(const struct EcGraph *g, bool debug_checks, struct EcColoring **out);

/**
 * Parses coloring text for `g`. Invalid colorings parse fine; use
 * [`ec_verify`] to judge them.
 */
enum EcStatus ec_coloring_parse(const struct EcGraph *g, const char *text, struct EcColoring **out);

void ec_coloring_free(struct EcColoring *c);

/**
 * Color of `{u, v}`: writes the color id, or -1 when uncolored or not an
 * edge.
 */
enum EcStatus ec_coloring_color_of(const struct EcColoring *c, size_t u, size_t v, int64_t *out);

size_t ec_coloring_palette(const struct EcColoring *c);

size_t ec_coloring_colors_used(const struct EcColoring *c);

size_t ec_coloring_count_colored(const struct EcColoring *c);

/**
 * Coloring text (`s` header plus `e` lines). Free with [`ec_string_free`].
 * NULL when `c` is NULL.
 */
char *ec_coloring_to_text(const struct EcColoring *c);

void ec_string_free(char *s);

/**
 * Judges `c` against `g`.
 */
enum EcStatus ec_verify(const struct EcGraph *g, const struct EcColoring *c, struct EcVerdict *out);

/**
 * Exact chromatic index by backtracking; refuses graphs with more than
 * `max_edges` edges.
 */
enum EcStatus ec_exact_chromatic_index(const struct EcGraph *g, size_t max_edges, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EDGECOLOR_H */
