#include "core/structured.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gossip {

namespace {

constexpr long long kMinRingSize = 2;

void require_rho(double rho) {
  if (!(std::isfinite(rho) && rho > 0.0))
    throw std::invalid_argument("rho must be positive and finite");
}

void require_size(Topology kind, long long n) {
  const long long min_n = kind == Topology::kDisconnected ? 1 : kMinRingSize;
  if (n < min_n)
    throw std::invalid_argument(std::string(topology_name(kind)) + " topology needs at least " +
                                std::to_string(min_n) + " nodes");
}

void require_index(long long n, long long i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("series index must lie in [1, n-1]");
}

}  // namespace

const char* topology_name(Topology t) {
  switch (t) {
    case Topology::kDisconnected: return "disconnected";
    case Topology::kRing: return "ring";
    case Topology::kFull: return "full";
  }
  throw std::invalid_argument("unknown topology");
}

bool topology_from_name(std::string_view name, Topology& out) {
  if (name == "disconnected") out = Topology::kDisconnected;
  else if (name == "ring") out = Topology::kRing;
  else if (name == "full") out = Topology::kFull;
  else return false;
  return true;
}

GossipNetwork build_structured(const TopologySpec& spec) {
  require_size(spec.kind, spec.n);
  if (!(std::isfinite(spec.lambda) && spec.lambda > 0.0))
    throw std::invalid_argument("lambda must be positive and finite");
  if (!(std::isfinite(spec.lambda_e) && spec.lambda_e > 0.0))
    throw std::invalid_argument("lambda_e must be positive and finite");
  if (spec.n > std::numeric_limits<int>::max())
    throw std::invalid_argument("node count too large to materialize");

  const int n = static_cast<int>(spec.n);
  std::vector<double> src(n, spec.lambda / n);
  std::vector<Edge> edges;

  switch (spec.kind) {
    case Topology::kDisconnected:
      break;
    case Topology::kRing:
      if (n == 2) {
        // both directions collapse onto the single neighbor
        edges = {{0, 1, spec.lambda}, {1, 0, spec.lambda}};
      } else {
        for (int i = 0; i < n; ++i) {
          edges.push_back({i, (i + 1) % n, spec.lambda / 2});
          edges.push_back({i, (i + n - 1) % n, spec.lambda / 2});
        }
      }
      break;
    case Topology::kFull:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) edges.push_back({i, j, spec.lambda / (n - 1)});
      break;
  }

  return GossipNetwork(n, spec.lambda_e, std::move(src), edges);
}

double disconnected_freshness(long long n, double rho) {
  require_size(Topology::kDisconnected, n);
  require_rho(rho);
  return 1.0 / (1.0 + static_cast<double>(n) * rho);
}

double ring_freshness(long long n, double rho) {
  require_size(Topology::kRing, n);
  require_rho(rho);
  double f = 1.0 / (1.0 + rho);  // whole-network set
  for (long long j = n - 1; j >= 1; --j) {
    const double source_share = static_cast<double>(j) / static_cast<double>(n);
    f = (source_share + f) / (1.0 + rho + source_share);
  }
  return f;
}

double full_freshness(long long n, double rho) {
  require_size(Topology::kFull, n);
  require_rho(rho);
  double f = 1.0 / (1.0 + rho);
  for (long long j = n - 1; j >= 1; --j) {
    const double source_share = static_cast<double>(j) / static_cast<double>(n);
    const double gossip = static_cast<double>(j) * static_cast<double>(n - j) /
                          static_cast<double>(n - 1);
    f = (source_share + gossip * f) / (rho + source_share + gossip);
  }
  return f;
}

double structured_freshness(Topology kind, long long n, double rho) {
  switch (kind) {
    case Topology::kDisconnected: return disconnected_freshness(n, rho);
    case Topology::kRing: return ring_freshness(n, rho);
    case Topology::kFull: return full_freshness(n, rho);
  }
  throw std::invalid_argument("unknown topology");
}

double ring_freshness_series(long long n, double rho) {
  require_size(Topology::kRing, n);
  require_rho(rho);
  double total = 0.0;
  double log_product = 0.0;
  double term = 0.0;
  for (long long i = 1; i <= n - 1; ++i) {
    log_product += std::log1p(rho + static_cast<double>(i) / static_cast<double>(n));
    term = std::exp(std::log(static_cast<double>(i) / static_cast<double>(n)) - log_product);
    total += term;
  }
  // closing term carries the whole-network freshness through the same product
  return total + static_cast<double>(n) / static_cast<double>(n - 1) * term / (1.0 + rho);
}

double full_freshness_series(long long n, double rho) {
  require_size(Topology::kFull, n);
  require_rho(rho);
  double total = 0.0;
  double log_product = 0.0;
  double term = 0.0;
  for (long long i = 1; i <= n - 1; ++i) {
    if (i >= 2) {
      const double j = static_cast<double>(i - 1);
      log_product += std::log1p(static_cast<double>(n - 1) * rho / (static_cast<double>(n - i + 1) * j) +
                                static_cast<double>(n - 1) / static_cast<double>(n) /
                                    static_cast<double>(n - i + 1));
    }
    const double lead = 1.0 + static_cast<double>(n) * rho / static_cast<double>(i) +
                        static_cast<double>(n) / static_cast<double>(n - 1) *
                            static_cast<double>(n - i);
    term = std::exp(-std::log(lead) - log_product);
    total += term;
  }
  return total + static_cast<double>(n) / static_cast<double>(n - 1) * term / (1.0 + rho);
}

double ring_series_term(long long n, double rho, long long i) {
  require_size(Topology::kRing, n);
  require_rho(rho);
  require_index(n, i);
  double log_product = 0.0;
  for (long long j = 1; j <= i; ++j)
    log_product += std::log1p(rho + static_cast<double>(j) / static_cast<double>(n));
  return std::exp(std::log(static_cast<double>(i) / static_cast<double>(n)) - log_product);
}

double full_series_term(long long n, double rho, long long i) {
  require_size(Topology::kFull, n);
  require_rho(rho);
  require_index(n, i);
  double log_product = 0.0;
  for (long long j = 1; j <= i - 1; ++j)
    log_product += std::log1p(static_cast<double>(n - 1) * rho /
                                  (static_cast<double>(n - j) * static_cast<double>(j)) +
                              static_cast<double>(n - 1) / static_cast<double>(n) /
                                  static_cast<double>(n - j));
  const double lead = 1.0 + static_cast<double>(n) * rho / static_cast<double>(i) +
                      static_cast<double>(n) / static_cast<double>(n - 1) *
                          static_cast<double>(n - i);
  return std::exp(-std::log(lead) - log_product);
}

std::vector<double> ring_freshness_chain(long long n, double rho) {
  require_size(Topology::kRing, n);
  require_rho(rho);
  std::vector<double> chain(static_cast<std::size_t>(n));
  chain[n - 1] = 1.0 / (1.0 + rho);
  for (long long j = n - 1; j >= 1; --j) {
    const double source_share = static_cast<double>(j) / static_cast<double>(n);
    chain[j - 1] = (source_share + chain[j]) / (1.0 + rho + source_share);
  }
  return chain;
}

std::vector<double> full_freshness_chain(long long n, double rho) {
  require_size(Topology::kFull, n);
  require_rho(rho);
  std::vector<double> chain(static_cast<std::size_t>(n));
  chain[n - 1] = 1.0 / (1.0 + rho);
  for (long long j = n - 1; j >= 1; --j) {
    const double source_share = static_cast<double>(j) / static_cast<double>(n);
    const double gossip = static_cast<double>(j) * static_cast<double>(n - j) /
                          static_cast<double>(n - 1);
    chain[j - 1] = (source_share + gossip * chain[j]) / (rho + source_share + gossip);
  }
  return chain;
}

double asymptotic_freshness(Topology kind, long long n, double rho) {
  if (n < 2) throw std::invalid_argument("asymptotics need at least 2 nodes");
  require_rho(rho);
  const double dn = static_cast<double>(n);
  switch (kind) {
    case Topology::kDisconnected:
      return 1.0 / (rho * dn);
    case Topology::kRing:
      return (1.0 / rho + 1.0 / (rho * rho)) / dn;
    case Topology::kFull:
      if (rho < 1.0) return std::pow(dn, -rho);
      if (rho == 1.0) return std::log(dn) / dn;
      return 1.0 / dn;
  }
  throw std::invalid_argument("unknown topology");
}

std::vector<ScalingRow> scaling_sweep(Topology kind, std::vector<long long> n_values, double rho) {
  if (n_values.empty()) throw std::invalid_argument("scaling sweep needs at least one size");
  std::sort(n_values.begin(), n_values.end());
  std::vector<ScalingRow> rows;
  rows.reserve(n_values.size());
  for (long long n : n_values) {
    const double f = structured_freshness(kind, n, rho);
    rows.push_back({n, f, 1.0 / f});
  }
  return rows;
}

}  // namespace gossip
