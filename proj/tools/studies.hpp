#pragma once

#include <vector>

#include "table.hpp"

namespace gossipcli {

// Size grid used by the scaling study tables.
const std::vector<long long>& scaling_size_grid();

// Inverse freshness against network size at rho = 2 for the disconnected and
// ring layouts, plus full layouts at each rho in full_rho_list.
ResultTable scaling_study_table(const std::vector<double>& full_rho_list,
                                const std::vector<long long>& n_values);

// Cluster-size sweeps for four reference rate settings (n=120, lambda_e=1):
//   'a'  lambda_s=1,  lambda_c=1,  lambda=1
//   'b'  lambda_s=10, lambda_c=1,  lambda=1
//   'c'  lambda_s=10, lambda_c=10, lambda=1
//   'd'  lambda_s=10, lambda_c=1,  lambda=2
// Each sweeps all three cluster topologies over every divisor of n.
ResultTable cluster_study_table(char setting);

}  // namespace gossipcli
