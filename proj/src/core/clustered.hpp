#pragma once

#include <vector>

#include "core/network.hpp"
#include "core/structured.hpp"

namespace gossip {

// Two-tier layout: the source updates m cluster heads (total rate lambda_s),
// each head relays into its own k-node cluster (total rate lambda_c), and the
// k end nodes of a cluster gossip among themselves in the given topology with
// per-node rate lambda. n = k * m end nodes overall.
struct ClusterSpec {
  Topology kind = Topology::kDisconnected;
  long long n = 1;
  long long k = 1;
  long long m = 1;
  double lambda_s = 1.0;
  double lambda_c = 1.0;
  double lambda = 1.0;
  double lambda_e = 1.0;
};

// Derives m = n / k; k must divide n.
ClusterSpec make_cluster_spec(Topology kind, long long n, long long k, double lambda_s,
                              double lambda_c, double lambda, double lambda_e);

// Freshness of a cluster head: it competes with the other m-1 heads for the
// source, so only the split rate lambda_s / m reaches it.
double cluster_head_freshness(double lambda_s, long long m, double lambda_e);

// Freshness of one end node. Clusters of size one have nobody to gossip
// with, so every topology reduces to the disconnected value there.
double clustered_freshness(const ClusterSpec& spec);

GossipNetwork build_clustered(const ClusterSpec& spec);

// Large-n freshness at the best cluster size for disconnected clusters:
// (lambda_c lambda_s / lambda_e^2) / n.
double clustered_disconnected_asymptotic(long long n, double lambda_s, double lambda_c,
                                         double lambda_e);

struct ClusterSweepRow {
  long long k = 1;
  long long m = 1;
  double freshness = 0.0;
};

struct OptimizationResult {
  std::vector<long long> best_k;  // every maximizer within tolerance, ascending
  double best_freshness = 0.0;
  std::vector<ClusterSweepRow> sweep;  // one row per divisor of n, ascending k
};

// Evaluates every cluster size k dividing n and reports the maximizers.
// Freshness ties within kClusterTieTolerance are kept together.
inline constexpr double kClusterTieTolerance = 1e-12;

OptimizationResult optimize_cluster_size(Topology kind, long long n, double lambda_s,
                                         double lambda_c, double lambda, double lambda_e);

}  // namespace gossip
