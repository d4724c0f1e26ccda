#include "studies.hpp"

#include <stdexcept>
#include <string>

#include "gossipfresh.h"

namespace gossipcli {

namespace {

[[noreturn]] void raise_api_error() { throw std::runtime_error(gf_last_error()); }

void append_scaling_rows(ResultTable& table, gf_topology topology, const char* name, double rho,
                         const std::vector<long long>& n_values) {
  std::vector<int64_t> sizes(n_values.begin(), n_values.end());
  std::vector<int64_t> out_n(sizes.size());
  std::vector<double> freshness(sizes.size());
  std::vector<double> inverse(sizes.size());
  if (gf_scaling_sweep(topology, sizes.data(), sizes.size(), rho, out_n.data(), freshness.data(),
                       inverse.data()) != GF_OK)
    raise_api_error();
  for (std::size_t i = 0; i < sizes.size(); ++i)
    table.add_row({std::string(name), rho, static_cast<long long>(out_n[i]), freshness[i],
                   inverse[i]});
}

struct ClusterSetting {
  long long n;
  double lambda_s;
  double lambda_c;
  double lambda;
  double lambda_e;
};

ClusterSetting cluster_setting(char setting) {
  switch (setting) {
    case 'a': return {120, 1.0, 1.0, 1.0, 1.0};
    case 'b': return {120, 10.0, 1.0, 1.0, 1.0};
    case 'c': return {120, 10.0, 10.0, 1.0, 1.0};
    case 'd': return {120, 10.0, 1.0, 2.0, 1.0};
    default: throw std::invalid_argument("cluster study setting must be 'a' through 'd'");
  }
}

}  // namespace

const std::vector<long long>& scaling_size_grid() {
  static const std::vector<long long> grid = {500,   1000,  2000,  5000,
                                              10000, 20000, 50000, 100000};
  return grid;
}

ResultTable scaling_study_table(const std::vector<double>& full_rho_list,
                                const std::vector<long long>& n_values) {
  ResultTable table({"topology", "rho", "n", "freshness", "inverse_freshness"});
  append_scaling_rows(table, GF_TOPOLOGY_DISCONNECTED, "disconnected", 2.0, n_values);
  append_scaling_rows(table, GF_TOPOLOGY_RING, "ring", 2.0, n_values);
  for (double rho : full_rho_list) append_scaling_rows(table, GF_TOPOLOGY_FULL, "full", rho, n_values);
  return table;
}

ResultTable cluster_study_table(char setting) {
  const ClusterSetting s = cluster_setting(setting);
  ResultTable table({"topology", "k", "m", "freshness"});

  static const gf_topology kinds[] = {GF_TOPOLOGY_DISCONNECTED, GF_TOPOLOGY_RING,
                                      GF_TOPOLOGY_FULL};
  static const char* names[] = {"disconnected", "ring", "full"};
  for (int t = 0; t < 3; ++t) {
    gf_opt_result* opt = nullptr;
    if (gf_optimize_cluster(kinds[t], s.n, s.lambda_s, s.lambda_c, s.lambda, s.lambda_e, &opt) !=
        GF_OK)
      raise_api_error();
    size_t rows = 0;
    gf_opt_sweep_count(opt, &rows);
    for (size_t i = 0; i < rows; ++i) {
      int64_t k = 0, m = 0;
      double f = 0.0;
      gf_opt_sweep_row(opt, i, &k, &m, &f);
      table.add_row(
          {std::string(names[t]), static_cast<long long>(k), static_cast<long long>(m), f});
    }
    gf_opt_result_free(opt);
  }
  return table;
}

}  // namespace gossipcli
