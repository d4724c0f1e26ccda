#pragma once

// Test-only helpers: a dense continuous-time chain oracle solved by Gaussian
// elimination, random graph generation, and a least-squares slope.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "core/network.hpp"

namespace testsupport {

inline double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// Stationary probability that at least one node of mask is fresh, from the
// full 2^n-state freshness chain. Independent of the subset recursion: builds
// the transposed generator and solves pi Q = 0, sum(pi) = 1 densely. Keep n
// small (<= 8); needs every node to receive direct source updates so the
// chain has a unique stationary law.
inline double ctmc_set_freshness(const gossip::GossipNetwork& net, std::uint64_t mask) {
  const int n = net.node_count();
  if (n > 8) throw std::logic_error("chain oracle is meant for tiny networks");
  const std::size_t states = std::size_t{1} << n;

  // A holds Q^T with the last balance equation replaced by normalization.
  std::vector<std::vector<double>> a(states, std::vector<double>(states + 1, 0.0));
  for (std::size_t s = 0; s < states; ++s) {
    auto jump = [&](std::size_t t, double rate) {
      if (t == s || rate <= 0.0) return;
      a[t][s] += rate;
      a[s][s] -= rate;
    };
    jump(0, net.lambda_e());
    for (int j = 0; j < n; ++j) jump(s | std::size_t{1} << j, net.source_rate(j));
    for (const gossip::Edge& e : net.edges())
      if (s >> e.from & 1) jump(s | std::size_t{1} << e.to, e.rate);
  }
  for (std::size_t s = 0; s < states; ++s) a[states - 1][s] = 1.0;
  a[states - 1][states] = 1.0;

  for (std::size_t col = 0; col < states; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < states; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    if (std::abs(a[col][col]) < 1e-300) throw std::runtime_error("singular chain generator");
    for (std::size_t r = 0; r < states; ++r) {
      if (r == col) continue;
      const double factor = a[r][col] / a[col][col];
      if (factor == 0.0) continue;
      for (std::size_t c = col; c <= states; ++c) a[r][c] -= factor * a[col][c];
    }
  }

  double total = 0.0;
  for (std::size_t s = 0; s < states; ++s)
    if ((s & mask) != 0) total += a[s][states] / a[s][s];
  return total;
}

// Random graph with 2..max_nodes nodes, ~half of all directed edges present.
// With positive_sources every node gets a direct source rate (what the chain
// oracle needs); otherwise roughly a third of the nodes get none.
inline gossip::GossipNetwork random_network(std::mt19937_64& rng, int max_nodes,
                                            bool positive_sources) {
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_nodes - 1));
  const double lambda_e = uniform(rng, 0.2, 2.5);
  std::vector<double> src(static_cast<std::size_t>(n));
  for (double& r : src)
    r = !positive_sources && uniform(rng, 0.0, 1.0) < 0.3 ? 0.0 : uniform(rng, 0.05, 1.5);
  std::vector<gossip::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && uniform(rng, 0.0, 1.0) < 0.5) edges.push_back({i, j, uniform(rng, 0.05, 2.5)});
  return gossip::GossipNetwork(n, lambda_e, std::move(src), edges);
}

inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("bad slope input");
  const double count = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace testsupport
