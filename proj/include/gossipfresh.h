/* C interface to the gossip freshness library. All functions return a
 * gf_status; outputs go through pointer arguments. Handles are opaque and
 * must be released with their matching free function. Error messages for the
 * most recent failure on the calling thread come from gf_last_error(). */

#ifndef GOSSIPFRESH_H
#define GOSSIPFRESH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gf_status {
  GF_OK = 0,
  GF_ERR_INVALID = 1,  /* bad argument or parameter combination */
  GF_ERR_PARSE = 2,    /* malformed network text */
  GF_ERR_CAPACITY = 3, /* node count exceeds a solver or set-width limit */
  GF_ERR_IO = 4,       /* file could not be read */
  GF_ERR_INTERNAL = 5
} gf_status;

typedef enum gf_topology {
  GF_TOPOLOGY_DISCONNECTED = 0,
  GF_TOPOLOGY_RING = 1,
  GF_TOPOLOGY_FULL = 2
} gf_topology;

typedef struct gf_network gf_network;
typedef struct gf_opt_result gf_opt_result;

const char* gf_version(void);
const char* gf_status_name(gf_status status);
const char* gf_last_error(void);

/* ------------------------------------------------------------------ */
/* Network construction and inspection                                 */

/* General network: n nodes, source self-update rate lambda_e, per-node
 * source rates (length n), and edge_count directed edges given as flat
 * (from, to) pairs with matching rates. */
gf_status gf_network_build(int32_t n, double lambda_e, const double* source_rates,
                           const int32_t* edge_endpoints, const double* edge_rates,
                           size_t edge_count, gf_network** out);

/* Symmetric layout: total source rate lambda split over n nodes, per-node
 * gossip rate lambda over the topology's neighbors. */
gf_status gf_network_build_structured(gf_topology topology, int64_t n, double lambda,
                                      double lambda_e, gf_network** out);

/* Two-tier layout with n = k * m end nodes behind m cluster heads. */
gf_status gf_network_build_clustered(gf_topology topology, int64_t n, int64_t k, double lambda_s,
                                     double lambda_c, double lambda, double lambda_e,
                                     gf_network** out);

gf_status gf_network_parse(const char* text, gf_network** out);
gf_status gf_network_load(const char* path, gf_network** out);
void gf_network_free(gf_network* net);

gf_status gf_network_node_count(const gf_network* net, int32_t* out);
gf_status gf_network_lambda_e(const gf_network* net, double* out);
gf_status gf_network_source_rate(const gf_network* net, int32_t node, double* out);
gf_status gf_network_gossip_rate(const gf_network* net, int32_t from, int32_t to, double* out);

/* Serializes in the same text format gf_network_parse accepts; parsing the
 * result reproduces the network exactly. Free with gf_text_free. */
gf_status gf_network_to_text(const gf_network* net, char** out);
void gf_text_free(char* text);

/* Node sets are 64-bit masks; bit j stands for node j. */
gf_status gf_source_rate_into_set(const gf_network* net, uint64_t set, double* out);
gf_status gf_node_rate_into_set(const gf_network* net, int32_t node, uint64_t set, double* out);
gf_status gf_updating_neighbors(const gf_network* net, uint64_t set, uint64_t* out);

/* ------------------------------------------------------------------ */
/* Exact freshness                                                     */

/* Long-run probability that at least one node in the set is fresh. max_nodes
 * caps the recursion (pass 0 for the default of 24). */
gf_status gf_set_freshness(const gf_network* net, uint64_t set, int32_t max_nodes, double* out);

/* Freshness of every node; out must hold node_count doubles. */
gf_status gf_node_freshness_all(const gf_network* net, int32_t max_nodes, double* out);

gf_status gf_serial_line_freshness(double lambda_e, double lambda_d, double lambda_c, double* out);
gf_status gf_parallel_cache_freshness(double lambda_e, double lambda_d1, double lambda_d2,
                                      double lambda_c1, double lambda_c2, double* out);
gf_status gf_mixed_example_freshness(double lambda_e, double lambda_d, double lambda_c1,
                                     double lambda_c2, double lambda, double* out);

/* ------------------------------------------------------------------ */
/* Structured topologies (rho = lambda_e / lambda)                     */

gf_status gf_structured_freshness(gf_topology topology, int64_t n, double rho, double* out);
gf_status gf_structured_freshness_series(gf_topology topology, int64_t n, double rho, double* out);
gf_status gf_structured_asymptotic(gf_topology topology, int64_t n, double rho, double* out);

/* Freshness and its reciprocal for every size in n_values (count entries).
 * Rows come back sorted by n; each output array needs count slots. */
gf_status gf_scaling_sweep(gf_topology topology, const int64_t* n_values, size_t count, double rho,
                           int64_t* out_n, double* out_freshness, double* out_inverse);

/* ------------------------------------------------------------------ */
/* Clustered layouts                                                   */

gf_status gf_cluster_head_freshness(double lambda_s, int64_t m, double lambda_e, double* out);

/* End-node freshness for clusters of size k (k must divide n). */
gf_status gf_clustered_freshness(gf_topology topology, int64_t n, int64_t k, double lambda_s,
                                 double lambda_c, double lambda, double lambda_e, double* out);

gf_status gf_clustered_disconnected_asymptotic(int64_t n, double lambda_s, double lambda_c,
                                               double lambda_e, double* out);

/* Evaluates every divisor of n as the cluster size and keeps the sweep. */
gf_status gf_optimize_cluster(gf_topology topology, int64_t n, double lambda_s, double lambda_c,
                              double lambda, double lambda_e, gf_opt_result** out);
void gf_opt_result_free(gf_opt_result* result);

gf_status gf_opt_best_freshness(const gf_opt_result* result, double* out);
gf_status gf_opt_best_count(const gf_opt_result* result, size_t* out);
gf_status gf_opt_best_k(const gf_opt_result* result, size_t index, int64_t* out);
gf_status gf_opt_sweep_count(const gf_opt_result* result, size_t* out);
gf_status gf_opt_sweep_row(const gf_opt_result* result, size_t index, int64_t* out_k,
                           int64_t* out_m, double* out_freshness);

/* ------------------------------------------------------------------ */
/* Simulation                                                          */

typedef struct gf_sim_config {
  double horizon;        /* total simulated time per replication */
  double warmup;         /* discarded prefix */
  int32_t replications;
  uint64_t seed;
} gf_sim_config;

/* Defaults: horizon 1e4, warmup 1e2, 20 replications, seed 1. */
void gf_sim_config_default(gf_sim_config* cfg);

/* Time-average freshness per node with standard errors. out_mean and out_se
 * must hold node_count doubles (out_se may be NULL). Identical inputs give
 * identical results on every platform. */
gf_status gf_simulate(const gf_network* net, const gf_sim_config* cfg, double* out_mean,
                      double* out_se);

/* Same, for the event that any node of the set is fresh. */
gf_status gf_simulate_set(const gf_network* net, uint64_t set, const gf_sim_config* cfg,
                          double* out_mean, double* out_se);

#ifdef __cplusplus
}
#endif

#endif /* GOSSIPFRESH_H */
