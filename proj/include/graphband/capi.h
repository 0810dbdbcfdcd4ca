/* C interface to the graphband library: opaque handles + integer status
 * codes. All functions returning gb_status set a thread-local message
 * retrievable with gb_last_error() on failure. */
#ifndef GRAPHBAND_CAPI_H
#define GRAPHBAND_CAPI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gb_graph gb_graph;
typedef struct gb_spectral gb_spectral;
typedef struct gb_partition gb_partition;

typedef enum {
  GB_OK = 0,
  GB_ERR_IO = 1,
  GB_ERR_INVALID_ARGUMENT = 2,
  GB_ERR_NUMERIC = 3,
  GB_ERR_INTERNAL = 4
} gb_status;

/* Message for the most recent failure on this thread; "" if none. */
const char* gb_last_error(void);

/* ---- graph ---- */
gb_status gb_graph_load(const char* path, int one_based, gb_graph** out);
void gb_graph_free(gb_graph* g);
int32_t gb_graph_n_vertices(const gb_graph* g);
int32_t gb_graph_n_edges(const gb_graph* g);
int32_t gb_graph_degree(const gb_graph* g, int32_t v); /* -1 on error */
int32_t gb_graph_component_count(const gb_graph* g);
gb_status gb_graph_largest_component(const gb_graph* g, gb_graph** out);

/* ---- spectrum ---- */
gb_status gb_spectral_compute(const gb_graph* g, gb_spectral** out);
void gb_spectral_free(gb_spectral* s);
int32_t gb_spectral_dim(const gb_spectral* s);
double gb_spectral_eigenvalue(const gb_spectral* s, int32_t k);
gb_status gb_spectral_write_csv(const gb_spectral* s, const char* path);

/* ---- sampling sets and partitions ---- */
gb_status gb_partition_one_hop(const gb_graph* g, gb_partition** out);
gb_status gb_partition_voronoi(const gb_graph* g, const int32_t* samples,
                               int32_t n_samples, gb_partition** out);
gb_status gb_random_sampling_set(const gb_graph* g, int32_t k, uint64_t seed,
                                 int32_t* out /* length k, sorted */);
void gb_partition_free(gb_partition* p);
int32_t gb_partition_sampling_size(const gb_partition* p);
gb_status gb_partition_write_csv(const gb_partition* p, const char* path);
gb_status gb_partition_read_csv(const gb_graph* g, const char* path,
                                gb_partition** out);
/* 0 = valid; GB_ERR_INVALID_ARGUMENT with message otherwise. */
gb_status gb_partition_validate(const gb_graph* g, const gb_partition* p);
/* JSON string with per-cell K/K~/R and Q_max/Q~_max/N_max; free with
 * gb_string_free. */
gb_status gb_partition_measures_json(const gb_graph* g, const gb_partition* p,
                                     char** out_json);
void gb_string_free(char* s);

/* ---- reconstruction / certificates / experiments (file oriented) ---- */
gb_status gb_reconstruct_to_file(const gb_graph* g, const gb_partition* p,
                                 const char* samples_csv,
                                 const char* truth_csv_or_null,
                                 const char* method /* ilsr|iwr|ipr */,
                                 double omega, int32_t max_iterations,
                                 double rel_tol, const char* out_json);
gb_status gb_certify_to_file(const gb_graph* g, const gb_partition* p,
                             double omega,
                             const char* frame /* delta|weighted|indicator */,
                             const char* out_json);
gb_status gb_experiment_run(const char* config_path, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHBAND_CAPI_H */
