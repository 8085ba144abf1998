/* C API for the linewalk shared library.
 *
 * Digraphs are opaque handles created by the parse/build functions and
 * released with lw_digraph_free. Every fallible call returns an lw_status;
 * LW_OK means success, anything else names the failure (lw_status_name) and
 * leaves a human-readable message in lw_last_error(), which is thread-local.
 * Strings returned through char** are heap-allocated; release them with
 * lw_string_free.
 */

#ifndef LINEWALK_H
#define LINEWALK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lw_status {
  LW_OK = 0,
  LW_ERR_PARSE,
  LW_ERR_VERTEX_OUT_OF_RANGE,
  LW_ERR_NON_BINARY_MATRIX,
  LW_ERR_NOT_SQUARE,
  LW_ERR_NOT_EULERIAN,
  LW_ERR_NOT_ACYCLIC,
  LW_ERR_NOT_REGULAR,
  LW_ERR_NOT_SPANNING,
  LW_ERR_NOT_SUBDIGRAPH,
  LW_ERR_NOT_LINE_DIGRAPH,
  LW_ERR_NOT_UNITARY,
  LW_ERR_EMPTY_ARC_SET,
  LW_ERR_SIZE_LIMIT_EXCEEDED,
  LW_ERR_LOOPS_PRESENT,
  LW_ERR_TOO_LARGE,
  LW_ERR_INVALID_PARTITION,
  LW_ERR_EXPONENT_NEGATIVE,
  LW_ERR_PENROSE_VIOLATION,
  LW_ERR_BAD_DIMENSION,
  LW_ERR_DIMENSION_MISMATCH,
  LW_ERR_BAD_GENERATORS,
  LW_ERR_BAD_ORDER,
  LW_ERR_INVALID_ARGUMENT,
  LW_ERR_INTERNAL
} lw_status;

typedef struct lw_digraph lw_digraph;

const char* lw_status_name(lw_status status);
/* Message from the most recent failing call on this thread ("" if none). */
const char* lw_last_error(void);
void lw_string_free(char* s);

/* --- digraph handles ----------------------------------------------------- */

/* Edge-list text: header "n m", then m lines "tail head"; '#' comments. */
lw_status lw_digraph_parse(const char* text, lw_digraph** out);
lw_status lw_digraph_from_arcs(int32_t n, int32_t arc_count, const int32_t* tails,
                               const int32_t* heads, int allow_loops, lw_digraph** out);
void lw_digraph_free(lw_digraph* g);

int32_t lw_digraph_vertex_count(const lw_digraph* g);
int32_t lw_digraph_arc_count(const lw_digraph* g);
/* Canonical edge list (arcs sorted lexicographically). */
lw_status lw_digraph_format(const lw_digraph* g, char** out);

/* --- constructions ------------------------------------------------------- */

lw_status lw_line_digraph(const lw_digraph* g, lw_digraph** out);
/* Edge list plus one "# vertex i = arc (a,b)" line per vertex. */
lw_status lw_line_digraph_format(const lw_digraph* g, char** out);
lw_status lw_iterated_line_digraph(const lw_digraph* g, int32_t k, int64_t max_vertices,
                                   lw_digraph** out);
lw_status lw_reverse(const lw_digraph* g, lw_digraph** out);
lw_status lw_debruijn(int32_t d, int32_t k, int64_t max_vertices, lw_digraph** out);

/* --- predicates and reports ---------------------------------------------- */

lw_status lw_is_strongly_connected(const lw_digraph* g, int* out);
lw_status lw_is_eulerian(const lw_digraph* g, int* out);
/* Regularity degree k, or -1 when not regular. */
lw_status lw_regular_degree(const lw_digraph* g, int32_t* out);

/* Matrix-criterion line-digraph recognition (loopless input only). */
lw_status lw_is_line_digraph(const lw_digraph* g, int* out);
/* Recognition report; *is_line receives the matrix verdict. */
lw_status lw_recognize_format(const lw_digraph* g, int32_t max_pattern_n, int json, char** out,
                              int* is_line);

/* "factors k n" header plus k successor rows. */
lw_status lw_factorization_format(const lw_digraph* g, char** out);

/* Ascending coefficient list of det(xI - M(g)). */
lw_status lw_char_poly(const lw_digraph* g, char** out);
/* "charpoly: x^e*(x-d)" line for the de Bruijn digraph; *ok = identity held. */
lw_status lw_debruijn_charpoly(int32_t d, int32_t k, char** out, int* ok);
/* Exact permanent of the adjacency matrix, as a decimal string. */
lw_status lw_permanent(const lw_digraph* g, char** out);

/* Per-step distributions as CSV (or a JSON object with the operator). Coin is
 * "auto", "hadamard", "grover", or "fourier". */
lw_status lw_walk_format(const lw_digraph* g, const char* coin, int32_t steps,
                         int32_t start_vertex, double tol, int json, char** out);

/* Theorem-check report for one digraph; *all_passed = no failing check. */
lw_status lw_verify_format(const lw_digraph* g, const char* coin, double tol,
                           int32_t max_pattern_n, int json, char** out, int* all_passed);
/* Same suite over `count` seeded random instances. */
lw_status lw_verify_random_format(int32_t count, uint64_t seed, int json, char** out,
                                  int* all_passed);

/* Bidirected-cycle example: three assertions plus the prism edge list. */
lw_status lw_cayley_demo_format(int32_t n, int json, char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* LINEWALK_H */
