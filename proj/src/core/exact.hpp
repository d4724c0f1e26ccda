#pragma once

#include <unordered_map>
#include <vector>

#include "core/network.hpp"

namespace gossip {

// Memoized subset -> freshness table for the superset recursion. The solver
// walks supersets of the query set, so the table can hold up to 2^n entries;
// max_nodes caps the network size a cache will accept.
class RecursionCache {
 public:
  static constexpr int kDefaultMaxNodes = 24;

  explicit RecursionCache(int max_nodes = kDefaultMaxNodes);

  int max_nodes() const { return max_nodes_; }
  std::size_t size() const { return values_.size(); }
  const double* find(NodeSet s) const;
  void store(NodeSet s, double value);
  void clear() { values_.clear(); }

 private:
  int max_nodes_;
  std::unordered_map<std::uint64_t, double> values_;
};

// Long-run probability that at least one node of s holds the source's
// current information. Solved by recursing on supersets: freshness of s is
// (source rate into s plus rate-weighted freshness of each one-node
// extension) over (lambda_e plus the same rates).
double freshness_of_set(const GossipNetwork& net, NodeSet s, RecursionCache& cache);
double freshness_of_set(const GossipNetwork& net, NodeSet s);

// Per-node freshness, one shared cache across the n singleton queries.
std::vector<double> freshness_all_nodes(const GossipNetwork& net,
                                        int max_nodes = RecursionCache::kDefaultMaxNodes);

// Closed forms for three small reference layouts, and builders for the
// matching networks (the node the closed form describes is the last index).

// source -> cache -> user chain
double serial_line_freshness(double lambda_e, double lambda_d, double lambda_c);
GossipNetwork serial_line_network(double lambda_e, double lambda_d, double lambda_c);

// two caches updating one user
double parallel_cache_freshness(double lambda_e, double lambda_d1, double lambda_d2,
                                double lambda_c1, double lambda_c2);
GossipNetwork parallel_cache_network(double lambda_e, double lambda_d1, double lambda_d2,
                                     double lambda_c1, double lambda_c2);

// one cache feeding two nodes that also gossip (rate lambda may be zero)
double mixed_example_freshness(double lambda_e, double lambda_d, double lambda_c1,
                               double lambda_c2, double lambda);
GossipNetwork mixed_example_network(double lambda_e, double lambda_d, double lambda_c1,
                                    double lambda_c2, double lambda);

}  // namespace gossip
