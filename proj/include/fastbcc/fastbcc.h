#ifndef FASTBCC_FASTBCC_H
#define FASTBCC_FASTBCC_H

/* C interface to the fastbcc library. All handles are opaque; every call that
 * can fail returns an fbcc_status and records a message retrievable with
 * fbcc_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FASTBCC_BUILDING)
#    define FBCC_API __declspec(dllexport)
#  else
#    define FBCC_API __declspec(dllimport)
#  endif
#else
#  define FBCC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fbcc_status {
  FBCC_OK = 0,
  FBCC_ERR_IO = 1,
  FBCC_ERR_FORMAT = 2,
  FBCC_ERR_INVALID_ARGUMENT = 3,
  FBCC_ERR_INVALID_STRUCTURE = 4,
  FBCC_ERR_TOO_LARGE = 5,
  FBCC_ERR_INTERNAL = 6
} fbcc_status;

typedef enum fbcc_algo {
  FBCC_ALGO_FASTBCC = 0,
  FBCC_ALGO_HOPCROFT_TARJAN = 1,
  FBCC_ALGO_TARJAN_VISHKIN = 2
} fbcc_algo;

typedef struct fbcc_graph fbcc_graph;
typedef struct fbcc_blocks fbcc_blocks;

typedef struct fbcc_run_stats {
  uint64_t bcc_count;
  double total_seconds;
  /* Four-step breakdown; zero for the baselines. */
  double first_cc_seconds;
  double rooting_seconds;
  double tagging_seconds;
  double last_cc_seconds;
  /* Peak auxiliary allocation during the run, in 8-byte words. */
  uint64_t peak_aux_words;
} fbcc_run_stats;

FBCC_API const char* fbcc_status_string(fbcc_status status);
/* Message of the last failed call on this thread; "" if none. */
FBCC_API const char* fbcc_last_error(void);

/* Loads a .bin or .adj file. Input that is not a simple symmetric graph is
 * normalized (symmetrized, self loops and duplicates dropped); `normalized`
 * and `legacy_header` (either may be NULL) report what happened. */
FBCC_API fbcc_status fbcc_graph_load(const char* path, fbcc_graph** out, int* normalized, int* legacy_header);
FBCC_API fbcc_status fbcc_graph_write_bin(const fbcc_graph* g, const char* path);
/* Builds a graph from `count` undirected edges given as pairs (u0, v0, u1, v1, ...). */
FBCC_API fbcc_status fbcc_graph_from_edges(uint64_t n, const uint64_t* pairs, uint64_t count, fbcc_graph** out);
FBCC_API fbcc_status fbcc_gen_grid(uint64_t rows, uint64_t cols, int circular, double keep_prob, uint64_t seed,
                                   fbcc_graph** out);
FBCC_API fbcc_status fbcc_gen_chain(uint64_t n, fbcc_graph** out);
FBCC_API fbcc_status fbcc_gen_random(uint64_t n, double p, uint64_t seed, fbcc_graph** out);
FBCC_API uint64_t fbcc_graph_num_vertices(const fbcc_graph* g);
/* Directed adjacency slots: twice the number of undirected edges. */
FBCC_API uint64_t fbcc_graph_num_edges(const fbcc_graph* g);
FBCC_API void fbcc_graph_free(fbcc_graph* g);

/* Worker threads for later calls; 0 restores the default (hardware
 * parallelism, or FASTBCC_NUM_THREADS when set). */
FBCC_API fbcc_status fbcc_set_threads(int threads);
FBCC_API int fbcc_get_threads(void);

/* One timed run of `algo`. */
FBCC_API fbcc_status fbcc_run(const fbcc_graph* g, fbcc_algo algo, fbcc_run_stats* stats);

/* Full block partition plus articulation points. FBCC_ALGO_TARJAN_VISHKIN
 * only reports counts and is rejected here. */
FBCC_API fbcc_status fbcc_blocks_compute(const fbcc_graph* g, fbcc_algo algo, fbcc_blocks** out);
FBCC_API uint64_t fbcc_blocks_count(const fbcc_blocks* b);
/* Vertices of block i; *size receives its length. NULL if i is out of range. */
FBCC_API const uint64_t* fbcc_blocks_get(const fbcc_blocks* b, uint64_t i, uint64_t* size);
FBCC_API uint64_t fbcc_blocks_num_articulation(const fbcc_blocks* b);
FBCC_API const uint64_t* fbcc_blocks_articulation(const fbcc_blocks* b);
FBCC_API void fbcc_blocks_free(fbcc_blocks* b);

/* Runs fastbcc and Hopcroft-Tarjan and compares canonical block partitions.
 * *match receives 1 if equal. On mismatch the first difference is written to
 * `message` (truncated to `capacity`). A nonzero `corrupt_for_testing`
 * damages the fastbcc labeling before extraction (negative control). */
FBCC_API fbcc_status fbcc_verify(const fbcc_graph* g, int corrupt_for_testing, int* match, char* message,
                                 size_t capacity);

#ifdef __cplusplus
}
#endif

#endif
