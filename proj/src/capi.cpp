#include "gossipfresh.h"

#include <cstring>
#include <new>
#include <string>

#include "core/clustered.hpp"
#include "core/exact.hpp"
#include "core/network.hpp"
#include "core/simulator.hpp"
#include "core/structured.hpp"

struct gf_network {
  gossip::GossipNetwork net;
};

struct gf_opt_result {
  gossip::OptimizationResult result;
};

namespace {

thread_local std::string t_last_error;

gf_status fail(gf_status status, const char* message) {
  t_last_error = message;
  return status;
}

// Runs fn and folds any exception into a status code.
template <class Fn>
gf_status guarded(Fn&& fn) {
  try {
    fn();
    return GF_OK;
  } catch (const gossip::ParseError& e) {
    return fail(GF_ERR_PARSE, e.what());
  } catch (const gossip::CapacityError& e) {
    return fail(GF_ERR_CAPACITY, e.what());
  } catch (const gossip::IoError& e) {
    return fail(GF_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GF_ERR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GF_ERR_INTERNAL, e.what());
  }
}

gf_status require(bool ok, const char* message) {
  return ok ? GF_OK : fail(GF_ERR_INVALID, message);
}

bool to_topology(gf_topology in, gossip::Topology& out) {
  switch (in) {
    case GF_TOPOLOGY_DISCONNECTED: out = gossip::Topology::kDisconnected; return true;
    case GF_TOPOLOGY_RING: out = gossip::Topology::kRing; return true;
    case GF_TOPOLOGY_FULL: out = gossip::Topology::kFull; return true;
  }
  return false;
}

gf_status topology_arg(gf_topology in, gossip::Topology& out) {
  return require(to_topology(in, out), "unknown topology value");
}

gossip::NodeSet to_set(uint64_t mask) { return gossip::NodeSet::from_mask(mask); }

int cache_cap(int32_t max_nodes) {
  return max_nodes == 0 ? gossip::RecursionCache::kDefaultMaxNodes : max_nodes;
}

gossip::SimConfig to_sim_config(const gf_sim_config* cfg) {
  gossip::SimConfig out;
  if (cfg != nullptr) {
    out.horizon = cfg->horizon;
    out.warmup = cfg->warmup;
    out.replications = cfg->replications;
    out.seed = cfg->seed;
  }
  return out;
}

}  // namespace

extern "C" {

const char* gf_version(void) { return "0.1.0"; }

const char* gf_status_name(gf_status status) {
  switch (status) {
    case GF_OK: return "ok";
    case GF_ERR_INVALID: return "invalid argument";
    case GF_ERR_PARSE: return "parse error";
    case GF_ERR_CAPACITY: return "capacity exceeded";
    case GF_ERR_IO: return "io error";
    case GF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gf_last_error(void) { return t_last_error.c_str(); }

gf_status gf_network_build(int32_t n, double lambda_e, const double* source_rates,
                           const int32_t* edge_endpoints, const double* edge_rates,
                           size_t edge_count, gf_network** out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  if (gf_status s = require(n < 1 || source_rates != nullptr, "source rate array is null"))
    return s;
  if (gf_status s = require(edge_count == 0 || (edge_endpoints != nullptr && edge_rates != nullptr),
                            "edge arrays are null"))
    return s;
  return guarded([&] {
    std::vector<double> src(source_rates, source_rates + (n < 1 ? 0 : n));
    std::vector<gossip::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i)
      edges[i] = {edge_endpoints[2 * i], edge_endpoints[2 * i + 1], edge_rates[i]};
    *out = new gf_network{gossip::GossipNetwork(n, lambda_e, std::move(src), edges)};
  });
}

gf_status gf_network_build_structured(gf_topology topology, int64_t n, double lambda,
                                      double lambda_e, gf_network** out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  gossip::Topology kind;
  if (gf_status s = topology_arg(topology, kind)) return s;
  return guarded([&] {
    *out = new gf_network{gossip::build_structured({kind, n, lambda, lambda_e})};
  });
}

gf_status gf_network_build_clustered(gf_topology topology, int64_t n, int64_t k, double lambda_s,
                                     double lambda_c, double lambda, double lambda_e,
                                     gf_network** out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  gossip::Topology kind;
  if (gf_status s = topology_arg(topology, kind)) return s;
  return guarded([&] {
    *out = new gf_network{gossip::build_clustered(
        gossip::make_cluster_spec(kind, n, k, lambda_s, lambda_c, lambda, lambda_e))};
  });
}

gf_status gf_network_parse(const char* text, gf_network** out) {
  if (gf_status s = require(text != nullptr, "text is null")) return s;
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] { *out = new gf_network{gossip::parse_network(text)}; });
}

gf_status gf_network_load(const char* path, gf_network** out) {
  if (gf_status s = require(path != nullptr, "path is null")) return s;
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] { *out = new gf_network{gossip::load_network(path)}; });
}

void gf_network_free(gf_network* net) { delete net; }

gf_status gf_network_node_count(const gf_network* net, int32_t* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  *out = net->net.node_count();
  return GF_OK;
}

gf_status gf_network_lambda_e(const gf_network* net, double* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  *out = net->net.lambda_e();
  return GF_OK;
}

gf_status gf_network_source_rate(const gf_network* net, int32_t node, double* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = net->net.source_rate(node); });
}

gf_status gf_network_gossip_rate(const gf_network* net, int32_t from, int32_t to, double* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = net->net.gossip_rate(from, to); });
}

gf_status gf_network_to_text(const gf_network* net, char** out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] {
    const std::string text = gossip::format_network(net->net);
    char* buffer = new char[text.size() + 1];
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    *out = buffer;
  });
}

void gf_text_free(char* text) { delete[] text; }

gf_status gf_source_rate_into_set(const gf_network* net, uint64_t set, double* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = gossip::source_rate_into_set(net->net, to_set(set)); });
}

gf_status gf_node_rate_into_set(const gf_network* net, int32_t node, uint64_t set, double* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = gossip::node_rate_into_set(net->net, node, to_set(set)); });
}

gf_status gf_updating_neighbors(const gf_network* net, uint64_t set, uint64_t* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] { *out = gossip::updating_neighbors(net->net, to_set(set)).mask(); });
}

gf_status gf_set_freshness(const gf_network* net, uint64_t set, int32_t max_nodes, double* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] {
    gossip::RecursionCache cache(cache_cap(max_nodes));
    *out = gossip::freshness_of_set(net->net, to_set(set), cache);
  });
}

gf_status gf_node_freshness_all(const gf_network* net, int32_t max_nodes, double* out) {
  if (gf_status s = require(net != nullptr && out != nullptr, "null argument")) return s;
  return guarded([&] {
    const std::vector<double> values =
        gossip::freshness_all_nodes(net->net, cache_cap(max_nodes));
    std::memcpy(out, values.data(), values.size() * sizeof(double));
  });
}

gf_status gf_serial_line_freshness(double lambda_e, double lambda_d, double lambda_c,
                                   double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] { *out = gossip::serial_line_freshness(lambda_e, lambda_d, lambda_c); });
}

gf_status gf_parallel_cache_freshness(double lambda_e, double lambda_d1, double lambda_d2,
                                      double lambda_c1, double lambda_c2, double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] {
    *out = gossip::parallel_cache_freshness(lambda_e, lambda_d1, lambda_d2, lambda_c1, lambda_c2);
  });
}

gf_status gf_mixed_example_freshness(double lambda_e, double lambda_d, double lambda_c1,
                                     double lambda_c2, double lambda, double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] {
    *out = gossip::mixed_example_freshness(lambda_e, lambda_d, lambda_c1, lambda_c2, lambda);
  });
}

gf_status gf_structured_freshness(gf_topology topology, int64_t n, double rho, double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  gossip::Topology kind;
  if (gf_status s = topology_arg(topology, kind)) return s;
  return guarded([&] { *out = gossip::structured_freshness(kind, n, rho); });
}

gf_status gf_structured_freshness_series(gf_topology topology, int64_t n, double rho,
                                         double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  gossip::Topology kind;
  if (gf_status s = topology_arg(topology, kind)) return s;
  return guarded([&] {
    switch (kind) {
      case gossip::Topology::kRing: *out = gossip::ring_freshness_series(n, rho); break;
      case gossip::Topology::kFull: *out = gossip::full_freshness_series(n, rho); break;
      case gossip::Topology::kDisconnected:
        throw std::invalid_argument("no series form for the disconnected topology");
    }
  });
}

gf_status gf_structured_asymptotic(gf_topology topology, int64_t n, double rho, double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  gossip::Topology kind;
  if (gf_status s = topology_arg(topology, kind)) return s;
  return guarded([&] { *out = gossip::asymptotic_freshness(kind, n, rho); });
}

gf_status gf_scaling_sweep(gf_topology topology, const int64_t* n_values, size_t count, double rho,
                           int64_t* out_n, double* out_freshness, double* out_inverse) {
  if (gf_status s = require(n_values != nullptr && count > 0, "size list is empty")) return s;
  if (gf_status s = require(out_n != nullptr && out_freshness != nullptr && out_inverse != nullptr,
                            "output pointer is null"))
    return s;
  gossip::Topology kind;
  if (gf_status s = topology_arg(topology, kind)) return s;
  return guarded([&] {
    const std::vector<gossip::ScalingRow> rows =
        gossip::scaling_sweep(kind, {n_values, n_values + count}, rho);
    for (size_t i = 0; i < rows.size(); ++i) {
      out_n[i] = rows[i].n;
      out_freshness[i] = rows[i].freshness;
      out_inverse[i] = rows[i].inverse;
    }
  });
}

gf_status gf_cluster_head_freshness(double lambda_s, int64_t m, double lambda_e, double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] { *out = gossip::cluster_head_freshness(lambda_s, m, lambda_e); });
}

gf_status gf_clustered_freshness(gf_topology topology, int64_t n, int64_t k, double lambda_s,
                                 double lambda_c, double lambda, double lambda_e, double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  gossip::Topology kind;
  if (gf_status s = topology_arg(topology, kind)) return s;
  return guarded([&] {
    *out = gossip::clustered_freshness(
        gossip::make_cluster_spec(kind, n, k, lambda_s, lambda_c, lambda, lambda_e));
  });
}

gf_status gf_clustered_disconnected_asymptotic(int64_t n, double lambda_s, double lambda_c,
                                               double lambda_e, double* out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  return guarded([&] {
    *out = gossip::clustered_disconnected_asymptotic(n, lambda_s, lambda_c, lambda_e);
  });
}

gf_status gf_optimize_cluster(gf_topology topology, int64_t n, double lambda_s, double lambda_c,
                              double lambda, double lambda_e, gf_opt_result** out) {
  if (gf_status s = require(out != nullptr, "output pointer is null")) return s;
  gossip::Topology kind;
  if (gf_status s = topology_arg(topology, kind)) return s;
  return guarded([&] {
    *out = new gf_opt_result{
        gossip::optimize_cluster_size(kind, n, lambda_s, lambda_c, lambda, lambda_e)};
  });
}

void gf_opt_result_free(gf_opt_result* result) { delete result; }

gf_status gf_opt_best_freshness(const gf_opt_result* result, double* out) {
  if (gf_status s = require(result != nullptr && out != nullptr, "null argument")) return s;
  *out = result->result.best_freshness;
  return GF_OK;
}

gf_status gf_opt_best_count(const gf_opt_result* result, size_t* out) {
  if (gf_status s = require(result != nullptr && out != nullptr, "null argument")) return s;
  *out = result->result.best_k.size();
  return GF_OK;
}

gf_status gf_opt_best_k(const gf_opt_result* result, size_t index, int64_t* out) {
  if (gf_status s = require(result != nullptr && out != nullptr, "null argument")) return s;
  if (gf_status s = require(index < result->result.best_k.size(), "index out of range")) return s;
  *out = result->result.best_k[index];
  return GF_OK;
}

gf_status gf_opt_sweep_count(const gf_opt_result* result, size_t* out) {
  if (gf_status s = require(result != nullptr && out != nullptr, "null argument")) return s;
  *out = result->result.sweep.size();
  return GF_OK;
}

gf_status gf_opt_sweep_row(const gf_opt_result* result, size_t index, int64_t* out_k,
                           int64_t* out_m, double* out_freshness) {
  if (gf_status s = require(result != nullptr && out_k != nullptr && out_m != nullptr &&
                                out_freshness != nullptr,
                            "null argument"))
    return s;
  if (gf_status s = require(index < result->result.sweep.size(), "index out of range")) return s;
  const gossip::ClusterSweepRow& row = result->result.sweep[index];
  *out_k = row.k;
  *out_m = row.m;
  *out_freshness = row.freshness;
  return GF_OK;
}

void gf_sim_config_default(gf_sim_config* cfg) {
  if (cfg == nullptr) return;
  cfg->horizon = 1e4;
  cfg->warmup = 1e2;
  cfg->replications = 20;
  cfg->seed = 1;
}

gf_status gf_simulate(const gf_network* net, const gf_sim_config* cfg, double* out_mean,
                      double* out_se) {
  if (gf_status s = require(net != nullptr && out_mean != nullptr, "null argument")) return s;
  return guarded([&] {
    const gossip::SimEstimate est = gossip::simulate(net->net, to_sim_config(cfg));
    std::memcpy(out_mean, est.mean.data(), est.mean.size() * sizeof(double));
    if (out_se != nullptr) std::memcpy(out_se, est.se.data(), est.se.size() * sizeof(double));
  });
}

gf_status gf_simulate_set(const gf_network* net, uint64_t set, const gf_sim_config* cfg,
                          double* out_mean, double* out_se) {
  if (gf_status s = require(net != nullptr && out_mean != nullptr, "null argument")) return s;
  return guarded([&] {
    const gossip::SimEstimate est = gossip::simulate_set(net->net, to_set(set), to_sim_config(cfg));
    *out_mean = est.mean[0];
    if (out_se != nullptr) *out_se = est.se[0];
  });
}

}  // extern "C"
