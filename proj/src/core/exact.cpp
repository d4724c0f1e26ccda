#include "core/exact.hpp"

#include <cmath>
#include <string>

namespace gossip {

namespace {

void require_positive(double v, const char* name) {
  if (!(std::isfinite(v) && v > 0.0))
    throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

void require_nonnegative(double v, const char* name) {
  if (!(std::isfinite(v) && v >= 0.0))
    throw std::invalid_argument(std::string(name) + " must be nonnegative and finite");
}

double solve_mask(const GossipNetwork& net, std::uint64_t mask, RecursionCache& cache) {
  if (const double* hit = cache.find(NodeSet::from_mask(mask))) return *hit;

  const NodeSet s = NodeSet::from_mask(mask);
  double source_rate = 0.0;
  std::vector<double> inbound(net.node_count(), 0.0);
  s.for_each([&](NodeId j) {
    source_rate += net.source_rate(j);
    for (const auto& [from, rate] : net.in_edges(j))
      if (!s.contains(from)) inbound[from] += rate;
  });

  double numerator = source_rate;
  double denominator = net.lambda_e() + source_rate;
  for (NodeId i = 0; i < net.node_count(); ++i) {
    if (inbound[i] > 0.0) {
      numerator += inbound[i] * solve_mask(net, mask | std::uint64_t{1} << i, cache);
      denominator += inbound[i];
    }
  }

  const double value = numerator / denominator;
  cache.store(s, value);
  return value;
}

}  // namespace

RecursionCache::RecursionCache(int max_nodes) : max_nodes_(max_nodes) {
  if (max_nodes_ < 1 || max_nodes_ > NodeSet::kCapacity)
    throw std::invalid_argument("cache node cap out of range");
}

const double* RecursionCache::find(NodeSet s) const {
  auto it = values_.find(s.mask());
  return it != values_.end() ? &it->second : nullptr;
}

void RecursionCache::store(NodeSet s, double value) { values_[s.mask()] = value; }

double freshness_of_set(const GossipNetwork& net, NodeSet s, RecursionCache& cache) {
  net.require_valid_set(s);
  if (net.node_count() > cache.max_nodes())
    throw CapacityError("exact solver is capped at " + std::to_string(cache.max_nodes()) +
                        " nodes; this network has " + std::to_string(net.node_count()));
  if (net.degenerate()) return 0.0;
  return solve_mask(net, s.mask(), cache);
}

double freshness_of_set(const GossipNetwork& net, NodeSet s) {
  RecursionCache cache;
  return freshness_of_set(net, s, cache);
}

std::vector<double> freshness_all_nodes(const GossipNetwork& net, int max_nodes) {
  RecursionCache cache(max_nodes);
  std::vector<double> values(net.node_count());
  for (NodeId j = 0; j < net.node_count(); ++j)
    values[j] = freshness_of_set(net, NodeSet::single(j), cache);
  return values;
}

double serial_line_freshness(double lambda_e, double lambda_d, double lambda_c) {
  require_positive(lambda_e, "lambda_e");
  require_positive(lambda_d, "lambda_d");
  require_positive(lambda_c, "lambda_c");
  return lambda_c / (lambda_c + lambda_e) * lambda_d / (lambda_d + lambda_e);
}

GossipNetwork serial_line_network(double lambda_e, double lambda_d, double lambda_c) {
  return GossipNetwork(2, lambda_e, {lambda_d, 0.0}, {{0, 1, lambda_c}});
}

double parallel_cache_freshness(double lambda_e, double lambda_d1, double lambda_d2,
                                double lambda_c1, double lambda_c2) {
  require_positive(lambda_e, "lambda_e");
  require_positive(lambda_d1, "lambda_d1");
  require_positive(lambda_d2, "lambda_d2");
  require_positive(lambda_c1, "lambda_c1");
  require_positive(lambda_c2, "lambda_c2");
  const double sum_d = lambda_d1 + lambda_d2;
  const double sum_c = lambda_c1 + lambda_c2;
  const double lead = sum_d * sum_c / ((lambda_e + sum_d) * (lambda_e + sum_c));
  const double cross = lambda_e / ((lambda_e + sum_d) * (lambda_e + sum_c)) *
                       (lambda_c2 * lambda_d1 / (lambda_e + lambda_c1 + lambda_d2) +
                        lambda_c1 * lambda_d2 / (lambda_e + lambda_c2 + lambda_d1));
  return lead - cross;
}

GossipNetwork parallel_cache_network(double lambda_e, double lambda_d1, double lambda_d2,
                                     double lambda_c1, double lambda_c2) {
  return GossipNetwork(3, lambda_e, {lambda_d1, lambda_d2, 0.0},
                       {{0, 2, lambda_c1}, {1, 2, lambda_c2}});
}

double mixed_example_freshness(double lambda_e, double lambda_d, double lambda_c1,
                               double lambda_c2, double lambda) {
  require_positive(lambda_e, "lambda_e");
  require_positive(lambda_d, "lambda_d");
  require_positive(lambda_c1, "lambda_c1");
  require_positive(lambda_c2, "lambda_c2");
  require_nonnegative(lambda, "lambda");
  const double cache_fresh = lambda_d / (lambda_d + lambda_e);
  const double direct = lambda_c1 / (lambda_e + lambda_c1 + lambda) *
                        (lambda_d + lambda * cache_fresh) / (lambda_e + lambda_d + lambda);
  const double relayed = lambda / (lambda_e + lambda_c1 + lambda) *
                         (lambda_c1 + lambda_c2) * cache_fresh / (lambda_e + lambda_c1 + lambda_c2);
  return direct + relayed;
}

GossipNetwork mixed_example_network(double lambda_e, double lambda_d, double lambda_c1,
                                    double lambda_c2, double lambda) {
  return GossipNetwork(3, lambda_e, {lambda_d, 0.0, 0.0},
                       {{0, 2, lambda_c1}, {0, 1, lambda_c2}, {1, 2, lambda}});
}

}  // namespace gossip
