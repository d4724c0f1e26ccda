#include "core/clustered.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace gossip {

namespace {

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0))
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

void validate(const ClusterSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("cluster layout needs at least one node");
  if (spec.k < 1 || spec.m < 1 || spec.k * spec.m != spec.n)
    throw std::invalid_argument("cluster size times cluster count must equal the node count");
  require_positive(spec.lambda_s, "lambda_s");
  require_positive(spec.lambda_c, "lambda_c");
  require_positive(spec.lambda, "lambda");
  require_positive(spec.lambda_e, "lambda_e");
}

}  // namespace

ClusterSpec make_cluster_spec(Topology kind, long long n, long long k, double lambda_s,
                              double lambda_c, double lambda, double lambda_e) {
  if (n < 1) throw std::invalid_argument("cluster layout needs at least one node");
  if (k < 1 || k > n || n % k != 0)
    throw std::invalid_argument("cluster size must divide the node count");
  ClusterSpec spec{kind, n, k, n / k, lambda_s, lambda_c, lambda, lambda_e};
  validate(spec);
  return spec;
}

double cluster_head_freshness(double lambda_s, long long m, double lambda_e) {
  require_positive(lambda_s, "lambda_s");
  require_positive(lambda_e, "lambda_e");
  if (m < 1) throw std::invalid_argument("cluster count must be at least 1");
  return lambda_s / (lambda_s + static_cast<double>(m) * lambda_e);
}

double clustered_freshness(const ClusterSpec& spec) {
  validate(spec);
  const double head = cluster_head_freshness(spec.lambda_s, spec.m, spec.lambda_e);
  const double k = static_cast<double>(spec.k);

  if (spec.kind == Topology::kDisconnected || spec.k == 1)
    return spec.lambda_c / (spec.lambda_c + k * spec.lambda_e) * head;

  // Whole-cluster set: only the head updates it, at the full relay rate.
  double f = spec.lambda_c / (spec.lambda_c + spec.lambda_e) * head;
  for (long long j = spec.k - 1; j >= 1; --j) {
    const double relay = static_cast<double>(j) * spec.lambda_c / k;
    const double gossip = spec.kind == Topology::kRing
                              ? spec.lambda
                              : static_cast<double>(j) * static_cast<double>(spec.k - j) *
                                    spec.lambda / static_cast<double>(spec.k - 1);
    f = (relay * head + gossip * f) / (spec.lambda_e + relay + gossip);
  }
  return f;
}

GossipNetwork build_clustered(const ClusterSpec& spec) {
  validate(spec);
  const long long total = spec.m + spec.n;
  if (total > std::numeric_limits<int>::max())
    throw std::invalid_argument("node count too large to materialize");

  // heads occupy 0 .. m-1; end node t of cluster c sits at m + c*k + t
  const int m = static_cast<int>(spec.m);
  const int k = static_cast<int>(spec.k);
  std::vector<double> src(static_cast<std::size_t>(total), 0.0);
  for (int h = 0; h < m; ++h) src[h] = spec.lambda_s / m;

  std::vector<Edge> edges;
  for (int c = 0; c < m; ++c) {
    const int base = m + c * k;
    for (int t = 0; t < k; ++t) edges.push_back({c, base + t, spec.lambda_c / k});
    if (spec.k == 1) continue;
    switch (spec.kind) {
      case Topology::kDisconnected:
        break;
      case Topology::kRing:
        if (k == 2) {
          edges.push_back({base, base + 1, spec.lambda});
          edges.push_back({base + 1, base, spec.lambda});
        } else {
          for (int t = 0; t < k; ++t) {
            edges.push_back({base + t, base + (t + 1) % k, spec.lambda / 2});
            edges.push_back({base + t, base + (t + k - 1) % k, spec.lambda / 2});
          }
        }
        break;
      case Topology::kFull:
        for (int t = 0; t < k; ++t)
          for (int u = 0; u < k; ++u)
            if (t != u) edges.push_back({base + t, base + u, spec.lambda / (k - 1)});
        break;
    }
  }

  return GossipNetwork(static_cast<int>(total), spec.lambda_e, std::move(src), edges);
}

double clustered_disconnected_asymptotic(long long n, double lambda_s, double lambda_c,
                                         double lambda_e) {
  if (n < 1) throw std::invalid_argument("cluster layout needs at least one node");
  require_positive(lambda_s, "lambda_s");
  require_positive(lambda_c, "lambda_c");
  require_positive(lambda_e, "lambda_e");
  return lambda_c * lambda_s / (lambda_e * lambda_e) / static_cast<double>(n);
}

OptimizationResult optimize_cluster_size(Topology kind, long long n, double lambda_s,
                                         double lambda_c, double lambda, double lambda_e) {
  if (n < 1) throw std::invalid_argument("cluster layout needs at least one node");

  OptimizationResult result;
  result.best_freshness = -1.0;
  for (long long k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    const ClusterSpec spec = make_cluster_spec(kind, n, k, lambda_s, lambda_c, lambda, lambda_e);
    const double f = clustered_freshness(spec);
    result.sweep.push_back({k, n / k, f});
    result.best_freshness = std::max(result.best_freshness, f);
  }
  for (const ClusterSweepRow& row : result.sweep)
    if (result.best_freshness - row.freshness <= kClusterTieTolerance)
      result.best_k.push_back(row.k);
  return result;
}

}  // namespace gossip
