/*
 * gmv: Grone-Merris verification library, C interface.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a gmv_status; on
 * failure gmv_last_error() describes the problem (per thread, valid until
 * the next failing call on that thread). Vertices are 0-based; vertex sets
 * are bitmasks with bit v standing for vertex v.
 */
#ifndef GMV_GMV_H
#define GMV_GMV_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GMV_BUILDING_LIBRARY)
#    define GMV_API __declspec(dllexport)
#  else
#    define GMV_API __declspec(dllimport)
#  endif
#else
#  define GMV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gmv_status {
  GMV_OK = 0,
  GMV_ERR_INVALID_ARGUMENT = 1, /* precondition violated (null, non-tree, empty U, ...) */
  GMV_ERR_PARSE = 2,            /* malformed graph6 / edge list / vertex list */
  GMV_ERR_OUT_OF_RANGE = 3,     /* vertex or size bound exceeded */
  GMV_ERR_IO = 4,               /* filesystem failure */
  GMV_ERR_BUFFER_TOO_SMALL = 5,
  GMV_ERR_INTERNAL = 6
} gmv_status;

typedef enum gmv_format { GMV_FORMAT_JSON = 0, GMV_FORMAT_CSV = 1, GMV_FORMAT_TEXT = 2 } gmv_format;

typedef enum gmv_mode { GMV_MODE_THEOREM = 0, GMV_MODE_DT = 1, GMV_MODE_BOTH = 2 } gmv_mode;

typedef enum gmv_shortcut {
  GMV_SHORTCUT_NONE = 0,
  GMV_SHORTCUT_REGULAR = 1,
  GMV_SHORTCUT_NEARLY_REGULAR = 2,
  GMV_SHORTCUT_MAX_DEGREE_LE_3 = 3,
  GMV_SHORTCUT_COMPLEMENT_REDUCED = 4
} gmv_shortcut;

typedef struct gmv_graph gmv_graph;
typedef struct gmv_report gmv_report;

typedef struct gmv_gm_result {
  int holds;
  int equality;
  gmv_shortcut shortcut;
  size_t first_violation; /* 1-based prefix length, 0 when none */
} gmv_gm_result;

GMV_API const char* gmv_version(void);
GMV_API const char* gmv_last_error(void);
GMV_API double gmv_default_tolerance(void);

/* Graph construction. */
GMV_API gmv_status gmv_graph_from_graph6(const char* text, gmv_graph** out);
GMV_API gmv_status gmv_graph_from_edge_list(const char* text, gmv_graph** out);
/* `pairs` holds 2 * edge_count vertex indices. */
GMV_API gmv_status gmv_graph_from_edges(int n, const int* pairs, size_t edge_count, gmv_graph** out);
GMV_API gmv_status gmv_graph_threshold(const int* creation, size_t length, gmv_graph** out);
GMV_API gmv_status gmv_graph_from_prufer(const int* sequence, size_t length, gmv_graph** out);
GMV_API gmv_status gmv_graph_random(int n, double edge_probability, uint64_t seed, gmv_graph** out);
GMV_API gmv_status gmv_graph_complement(const gmv_graph* g, gmv_graph** out);
/* i-th isomorphism class on n vertices (1 <= n <= 8), or i-th tree (2 <= n <= 10). */
GMV_API gmv_status gmv_class_count(int n, size_t* out);
GMV_API gmv_status gmv_class_at(int n, size_t index, gmv_graph** out);
GMV_API gmv_status gmv_tree_count(int n, size_t* out);
GMV_API gmv_status gmv_tree_at(int n, size_t index, gmv_graph** out);
GMV_API void gmv_graph_free(gmv_graph* g);

/* Graph queries. */
GMV_API int gmv_graph_order(const gmv_graph* g);
GMV_API size_t gmv_graph_edge_count(const gmv_graph* g);
/* Writes a NUL-terminated graph6 string; *needed receives the size
 * including the terminator. */
GMV_API gmv_status gmv_graph_to_graph6(const gmv_graph* g, char* buffer, size_t capacity, size_t* needed);
/* `out` must hold order(g) values, sorted non-increasing. */
GMV_API gmv_status gmv_graph_degree_sequence(const gmv_graph* g, int* out, size_t capacity);
GMV_API gmv_status gmv_graph_laplacian_spectrum(const gmv_graph* g, double* out, size_t capacity);
GMV_API gmv_status gmv_graph_is_threshold(const gmv_graph* g, int* out);
GMV_API gmv_status gmv_graph_gm_check(const gmv_graph* g, double tolerance, gmv_gm_result* out);
GMV_API gmv_status gmv_pair_gm_check(const gmv_graph* g, uint64_t deleted, double tolerance,
                                     gmv_gm_result* out);
GMV_API gmv_status gmv_parse_vertex_set(const char* text, int n, uint64_t* out);

/* Report producers. The report owns its rendered text. */
GMV_API gmv_status gmv_report_spectrum(const gmv_graph* g, gmv_format format, gmv_report** out);
GMV_API gmv_status gmv_report_gm(const gmv_graph* g, double tolerance, gmv_format format, gmv_report** out);
GMV_API gmv_status gmv_report_decompose(const gmv_graph* g, gmv_mode mode, double tolerance,
                                        gmv_format format, gmv_report** out);
GMV_API gmv_status gmv_report_tree_certificate(const gmv_graph* g, double tolerance, gmv_format format,
                                               gmv_report** out);
GMV_API gmv_status gmv_report_dirichlet(const gmv_graph* g, uint64_t deleted, double tolerance,
                                        gmv_format format, gmv_report** out);
GMV_API gmv_status gmv_report_single_deletions(const gmv_graph* g, double tolerance, gmv_format format,
                                               gmv_report** out);
GMV_API gmv_status gmv_report_threshold(const gmv_graph* g, double tolerance, gmv_format format,
                                        gmv_report** out);
/* All 2^(n-1) creation sequences on n vertices. */
GMV_API gmv_status gmv_report_threshold_all(int n, double tolerance, gmv_format format, gmv_report** out);
GMV_API gmv_status gmv_report_census(int n, gmv_mode mode, double tolerance, unsigned workers,
                                     gmv_format format, gmv_report** out);
/* out_dir may be NULL; otherwise shards, sweep.csv and summary.json go there. */
GMV_API gmv_status gmv_report_sweep(int n, int check_gm, int check_decompose, unsigned workers,
                                    double tolerance, const char* out_dir, gmv_format format,
                                    gmv_report** out);

GMV_API const char* gmv_report_text(const gmv_report* r);
GMV_API size_t gmv_report_size(const gmv_report* r);
/* Non-zero when a verification that must hold failed (a counterexample). */
GMV_API int gmv_report_counterexample(const gmv_report* r);
GMV_API double gmv_report_wall_time(const gmv_report* r);
GMV_API void gmv_report_free(gmv_report* r);

#ifdef __cplusplus
}
#endif

#endif /* GMV_GMV_H */
