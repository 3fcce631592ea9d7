/* C API for the learning-augmented clustering library.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return LAKM_OK (0) on success; on failure, lakm_last_error()
 * returns a thread-local description of the most recent error.
 */
#ifndef LAKM_H
#define LAKM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
  LAKM_OK = 0,
  LAKM_ERR_INVALID = 1, /* bad arguments (shape, range, labels) */
  LAKM_ERR_IO = 2,      /* file could not be read/written/parsed */
  LAKM_ERR_INTERNAL = 3
};

/* Corruption modes for lakm_corrupt. */
enum {
  LAKM_CORRUPT_NONE = 0,
  LAKM_CORRUPT_UNIFORM = 1,
  LAKM_CORRUPT_ADVERSARIAL = 2,
  LAKM_CORRUPT_DELETION = 3
};

typedef struct lakm_points lakm_points;
typedef struct lakm_labels lakm_labels;
typedef struct lakm_centers lakm_centers;
typedef struct lakm_result lakm_result;

const char* lakm_last_error(void);

/* 0 restores the hardware default. */
void lakm_set_max_threads(int n);

/* ---- points ---- */
int lakm_points_create(const double* data, size_t n, size_t d, lakm_points** out);
int lakm_points_load_csv(const char* path, lakm_points** out);
int lakm_points_save_csv(const lakm_points* p, const char* path);
size_t lakm_points_count(const lakm_points* p);
size_t lakm_points_dim(const lakm_points* p);
const double* lakm_points_data(const lakm_points* p);
void lakm_points_free(lakm_points* p);

/* ---- labels (int32 per point; -1 = unlabeled) ---- */
int lakm_labels_create(const int32_t* data, size_t n, lakm_labels** out);
int lakm_labels_load_csv(const char* path, lakm_labels** out);
int lakm_labels_save_csv(const lakm_labels* l, const char* path);
size_t lakm_labels_count(const lakm_labels* l);
const int32_t* lakm_labels_data(const lakm_labels* l);
void lakm_labels_free(lakm_labels* l);

/* ---- centers ---- */
int lakm_centers_create(const double* data, size_t k, size_t d, lakm_centers** out);
int lakm_centers_save_csv(const lakm_centers* c, const char* path);
size_t lakm_centers_count(const lakm_centers* c);
size_t lakm_centers_dim(const lakm_centers* c);
const double* lakm_centers_data(const lakm_centers* c);
void lakm_centers_free(lakm_centers* c);

/* ---- objectives and assignment ---- */
int lakm_cost_kmeans(const lakm_points* p, const lakm_centers* c, double* out);
int lakm_cost_kmedian(const lakm_points* p, const lakm_centers* c, double* out);
int lakm_assign_nearest(const lakm_points* p, const lakm_centers* c, lakm_labels** out);

/* Cost of a partition: sum of squared distances from each point to the
 * centroid of its part.  Labels must lie in [0,k); no unlabeled points. */
int lakm_partition_cost_kmeans(const lakm_points* p, const lakm_labels* l, size_t k,
                               double* out);

/* Per-class centroids (labels in [0,k)); unlabeled points are skipped,
 * empty classes get a farthest-point fallback center. */
int lakm_class_centroids(const lakm_points* p, const lakm_labels* l, size_t k,
                         lakm_centers** out);

/* ---- predictors ---- */
/* points/reference may be NULL except in adversarial mode. */
int lakm_corrupt(const lakm_labels* l, size_t k, int mode, double rate, uint64_t seed,
                 const lakm_points* points, const lakm_centers* reference,
                 lakm_labels** out);
int lakm_nn_predictor(const lakm_points* ref_points, const lakm_labels* ref_labels,
                      const lakm_points* query_points, lakm_labels** out);
int lakm_kmeanspp_predictor(const lakm_points* p, size_t k, uint64_t seed,
                            lakm_labels** out);

/* ---- baselines ---- */
int lakm_kmeanspp_seed(const lakm_points* p, size_t k, uint64_t seed, lakm_centers** out);
int lakm_lloyd(const lakm_points* p, const lakm_centers* init, size_t max_iters,
               double tol, lakm_centers** out);
int lakm_random_sampling_baseline(const lakm_points* p, const lakm_labels* l, size_t k,
                                  const double* q_grid, size_t q_count, uint64_t seed,
                                  lakm_result** out);

/* ---- clustering runs ----
 * alpha < 0 selects alpha over the default grid (0.01..0.15 step 0.01). */
int lakm_cluster_main(const lakm_points* p, const lakm_labels* predicted, size_t k,
                      double alpha, uint64_t seed, lakm_result** out);
int lakm_cluster_fast(const lakm_points* p, const lakm_labels* predicted, size_t k,
                      double alpha, uint64_t seed, lakm_result** out);
int lakm_cluster_deletion(const lakm_points* p, const lakm_labels* partial, size_t k,
                          lakm_result** out);
int lakm_cluster_kmedian(const lakm_points* p, const lakm_labels* predicted, size_t k,
                         double alpha, uint64_t seed, lakm_result** out);

/* ---- results ---- */
const lakm_centers* lakm_result_centers(const lakm_result* r);
/* NULL when the run produces centers only. */
const lakm_labels* lakm_result_labels(const lakm_result* r);
double lakm_result_alpha(const lakm_result* r);
/* Chosen subsample rate of the sampling baseline; 0 otherwise. */
double lakm_result_q(const lakm_result* r);
size_t lakm_result_warning_count(const lakm_result* r);
const char* lakm_result_warning(const lakm_result* r, size_t i);
void lakm_result_free(lakm_result* r);

/* ---- synthetic data ---- */
/* The kmeans++ lower-bound instance; any output pointer may be NULL. */
int lakm_gen_synth(size_t k, size_t d, double scale, lakm_points** points,
                   lakm_labels** labels, lakm_centers** optimal_centers,
                   double* optimal_cost);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LAKM_H */
