#pragma once

#include <string_view>
#include <vector>

#include "core/network.hpp"

namespace gossip {

enum class Topology { kDisconnected, kRing, kFull };

const char* topology_name(Topology t);
bool topology_from_name(std::string_view name, Topology& out);

// Symmetric n-node layout: the source spreads a total rate lambda uniformly
// over the nodes, and each node spends a total gossip rate lambda on its
// neighbors (none, the two ring neighbors, or everyone else).
struct TopologySpec {
  Topology kind = Topology::kDisconnected;
  long long n = 1;
  double lambda = 1.0;
  double lambda_e = 1.0;
};

GossipNetwork build_structured(const TopologySpec& spec);

// Freshness of one node as a function of rho = lambda_e / lambda. All nodes
// are exchangeable, so one value covers the network.
double disconnected_freshness(long long n, double rho);
double ring_freshness(long long n, double rho);
double full_freshness(long long n, double rho);
double structured_freshness(Topology kind, long long n, double rho);

// Same values through the explicit series, accumulated in log space.
double ring_freshness_series(long long n, double rho);
double full_freshness_series(long long n, double rho);

// Individual series coefficients, 1 <= i <= n-1.
double ring_series_term(long long n, double rho, long long i);
double full_series_term(long long n, double rho, long long i);

// Freshness of the nested contiguous sets S_1 through S_n; element j-1 holds
// the j-element set. S_1 recovers the single-node value.
std::vector<double> ring_freshness_chain(long long n, double rho);
std::vector<double> full_freshness_chain(long long n, double rho);

// Leading large-n behavior: 1/(n rho) for disconnected, (1/rho + 1/rho^2)/n
// for the ring, and n^-rho, log(n)/n, or 1/n for full depending on rho.
double asymptotic_freshness(Topology kind, long long n, double rho);

struct ScalingRow {
  long long n = 0;
  double freshness = 0.0;
  double inverse = 0.0;
};

// Evaluates one topology over a list of sizes at fixed rho, sorted by n.
std::vector<ScalingRow> scaling_sweep(Topology kind, std::vector<long long> n_values, double rho);

}  // namespace gossip
