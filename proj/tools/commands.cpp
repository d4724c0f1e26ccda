#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "gossipfresh.h"
#include "table.hpp"

namespace gossipcli {

namespace {

void check(gf_status status) {
  if (status != GF_OK) throw std::runtime_error(gf_last_error());
}

struct NetworkHandle {
  gf_network* ptr = nullptr;
  NetworkHandle() = default;
  NetworkHandle(const NetworkHandle&) = delete;
  NetworkHandle& operator=(const NetworkHandle&) = delete;
  ~NetworkHandle() { gf_network_free(ptr); }
};

struct OptHandle {
  gf_opt_result* ptr = nullptr;
  ~OptHandle() { gf_opt_result_free(ptr); }
};

gf_topology topology_value(const std::string& name) {
  if (name == "disconnected") return GF_TOPOLOGY_DISCONNECTED;
  if (name == "ring") return GF_TOPOLOGY_RING;
  if (name == "full") return GF_TOPOLOGY_FULL;
  throw CLI::ValidationError("--topology",
                             "must be disconnected, ring, or full (got '" + name + "')");
}

struct CommonOpts {
  std::string out_path;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& common) {
  cmd->add_option("--out", common.out_path, "write the table to this file instead of stdout");
  cmd->add_flag("--json", common.json, "emit JSON rows instead of CSV");
}

int emit(const ResultTable& table, const CommonOpts& common, std::ostream& out,
         std::ostream& err) {
  const std::string text = common.json ? table.to_json() : table.to_csv();
  if (common.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << common.out_path << "'\n";
    return 1;
  }
  file << text;
  return file.good() ? 0 : 1;
}

// solve: per-node freshness of a network file
struct SolveOpts {
  std::string graph;
  std::vector<int> nodes;
  CommonOpts common;
};

int run_solve(const SolveOpts& opt, std::ostream& out, std::ostream& err) {
  NetworkHandle net;
  check(gf_network_load(opt.graph.c_str(), &net.ptr));
  int32_t n = 0;
  check(gf_network_node_count(net.ptr, &n));

  ResultTable table({"node", "freshness"});
  if (opt.nodes.empty()) {
    std::vector<double> values(static_cast<std::size_t>(n));
    check(gf_node_freshness_all(net.ptr, 0, values.data()));
    for (int32_t j = 0; j < n; ++j) table.add_row({static_cast<long long>(j), values[j]});
  } else {
    for (int node : opt.nodes) {
      if (node < 0 || node >= n) throw std::runtime_error("node index out of range");
      double value = 0.0;
      check(gf_set_freshness(net.ptr, uint64_t{1} << node, 0, &value));
      table.add_row({static_cast<long long>(node), value});
    }
  }
  return emit(table, opt.common, out, err);
}

// structured: closed-form freshness over symmetric layouts
struct StructuredOpts {
  std::vector<std::string> topologies;
  std::vector<long long> sizes;
  std::vector<double> rhos;
  double lambda = 0.0;
  double lambda_e = 0.0;
  bool have_lambda = false;
  bool have_lambda_e = false;
  CommonOpts common;
};

std::vector<double> resolve_rhos(const StructuredOpts& opt) {
  if (!opt.rhos.empty()) {
    if (opt.have_lambda || opt.have_lambda_e)
      throw CLI::ValidationError("--rho", "give either --rho or the --lambda/--lambda-e pair");
    return opt.rhos;
  }
  if (!(opt.have_lambda && opt.have_lambda_e))
    throw CLI::ValidationError("--rho", "need --rho or both --lambda and --lambda-e");
  if (opt.lambda <= 0.0) throw CLI::ValidationError("--lambda", "must be positive");
  return {opt.lambda_e / opt.lambda};
}

int run_structured(const StructuredOpts& opt, std::ostream& out, std::ostream& err) {
  const std::vector<double> rhos = resolve_rhos(opt);
  ResultTable table({"topology", "n", "rho", "freshness"});
  for (const std::string& name : opt.topologies) {
    const gf_topology kind = topology_value(name);
    for (double rho : rhos)
      for (long long n : opt.sizes) {
        double value = 0.0;
        check(gf_structured_freshness(kind, n, rho, &value));
        table.add_row({name, n, rho, value});
      }
  }
  return emit(table, opt.common, out, err);
}

// clustered: end-node freshness for chosen cluster sizes
struct ClusteredOpts {
  std::vector<std::string> topologies;
  long long n = 0;
  std::vector<long long> ks;
  double lambda_s = 0.0;
  double lambda_c = 0.0;
  double lambda = 0.0;
  double lambda_e = 0.0;
  CommonOpts common;
};

int run_clustered(const ClusteredOpts& opt, std::ostream& out, std::ostream& err) {
  ResultTable table({"topology", "k", "m", "freshness"});
  for (const std::string& name : opt.topologies) {
    const gf_topology kind = topology_value(name);
    for (long long k : opt.ks) {
      double value = 0.0;
      check(gf_clustered_freshness(kind, opt.n, k, opt.lambda_s, opt.lambda_c, opt.lambda,
                                   opt.lambda_e, &value));
      table.add_row({name, k, opt.n / k, value});
    }
  }
  return emit(table, opt.common, out, err);
}

// scaling: freshness decay across network sizes
struct ScalingOpts {
  std::vector<std::string> topologies;
  std::vector<double> rhos;
  std::vector<long long> sizes;
  CommonOpts common;
};

int run_scaling(const ScalingOpts& opt, std::ostream& out, std::ostream& err) {
  ResultTable table({"topology", "rho", "n", "freshness", "inverse_freshness"});
  for (const std::string& name : opt.topologies) {
    const gf_topology kind = topology_value(name);
    for (double rho : opt.rhos) {
      std::vector<int64_t> sizes(opt.sizes.begin(), opt.sizes.end());
      std::vector<int64_t> out_n(sizes.size());
      std::vector<double> freshness(sizes.size());
      std::vector<double> inverse(sizes.size());
      check(gf_scaling_sweep(kind, sizes.data(), sizes.size(), rho, out_n.data(),
                             freshness.data(), inverse.data()));
      for (std::size_t i = 0; i < sizes.size(); ++i)
        table.add_row({name, rho, static_cast<long long>(out_n[i]), freshness[i], inverse[i]});
    }
  }
  return emit(table, opt.common, out, err);
}

// optimize-cluster: sweep every divisor of n as the cluster size
struct OptimizeOpts {
  std::vector<std::string> topologies;
  long long n = 0;
  double lambda_s = 0.0;
  double lambda_c = 0.0;
  double lambda = 0.0;
  double lambda_e = 0.0;
  CommonOpts common;
};

int run_optimize(const OptimizeOpts& opt, std::ostream& out, std::ostream& err) {
  ResultTable table({"topology", "k", "m", "freshness", "best"});
  for (const std::string& name : opt.topologies) {
    const gf_topology kind = topology_value(name);
    OptHandle result;
    check(gf_optimize_cluster(kind, opt.n, opt.lambda_s, opt.lambda_c, opt.lambda, opt.lambda_e,
                              &result.ptr));
    double best = 0.0;
    size_t rows = 0;
    size_t best_count = 0;
    check(gf_opt_best_freshness(result.ptr, &best));
    check(gf_opt_sweep_count(result.ptr, &rows));
    check(gf_opt_best_count(result.ptr, &best_count));
    std::vector<int64_t> best_ks(best_count);
    for (size_t i = 0; i < best_count; ++i) check(gf_opt_best_k(result.ptr, i, &best_ks[i]));
    for (size_t i = 0; i < rows; ++i) {
      int64_t k = 0, m = 0;
      double f = 0.0;
      check(gf_opt_sweep_row(result.ptr, i, &k, &m, &f));
      const bool is_best = std::find(best_ks.begin(), best_ks.end(), k) != best_ks.end();
      table.add_row({name, static_cast<long long>(k), static_cast<long long>(m), f,
                     static_cast<long long>(is_best ? 1 : 0)});
    }
  }
  return emit(table, opt.common, out, err);
}

// simulate: stochastic estimate from a graph file or a generated layout
struct SimulateOpts {
  std::string graph;
  std::string topology;
  long long n = 0;
  long long k = 0;
  double lambda = 0.0;
  double lambda_e = 0.0;
  double lambda_s = 0.0;
  double lambda_c = 0.0;
  bool have_n = false;
  bool have_k = false;
  bool have_lambda = false;
  bool have_lambda_e = false;
  bool have_lambda_s = false;
  bool have_lambda_c = false;
  std::vector<int> nodes;
  gf_sim_config cfg{};
  CommonOpts common;
};

void build_simulation_network(const SimulateOpts& opt, NetworkHandle& net) {
  if (!opt.graph.empty()) {
    check(gf_network_load(opt.graph.c_str(), &net.ptr));
    return;
  }
  const gf_topology kind = topology_value(opt.topology);
  if (opt.have_k) {
    check(gf_network_build_clustered(kind, opt.n, opt.k, opt.lambda_s, opt.lambda_c, opt.lambda,
                                     opt.lambda_e, &net.ptr));
    return;
  }
  check(gf_network_build_structured(kind, opt.n, opt.lambda, opt.lambda_e, &net.ptr));
}

int run_simulate(const SimulateOpts& opt, std::ostream& out, std::ostream& err) {
  NetworkHandle net;
  build_simulation_network(opt, net);
  int32_t n = 0;
  check(gf_network_node_count(net.ptr, &n));

  std::vector<double> mean(static_cast<std::size_t>(n));
  std::vector<double> se(static_cast<std::size_t>(n));
  check(gf_simulate(net.ptr, &opt.cfg, mean.data(), se.data()));

  std::vector<int> nodes = opt.nodes;
  if (nodes.empty()) {
    nodes.resize(static_cast<std::size_t>(n));
    for (int32_t j = 0; j < n; ++j) nodes[j] = j;
  }
  ResultTable table({"node", "estimate", "se"});
  for (int node : nodes) {
    if (node < 0 || node >= n) throw std::runtime_error("node index out of range");
    table.add_row({static_cast<long long>(node), mean[node], se[node]});
  }
  return emit(table, opt.common, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"binary freshness calculations for gossip networks"};
  app.name("gossipfresh");
  app.require_subcommand(1);

  SolveOpts solve_opts;
  CLI::App* solve = app.add_subcommand("solve", "per-node freshness of a network file");
  solve->add_option("--graph", solve_opts.graph, "network description file")->required();
  solve->add_option("--node", solve_opts.nodes, "restrict output to these nodes")->delimiter(',');
  add_common(solve, solve_opts.common);

  StructuredOpts structured_opts;
  CLI::App* structured =
      app.add_subcommand("structured", "closed-form freshness of symmetric layouts");
  structured->add_option("--topology", structured_opts.topologies, "disconnected, ring, or full")
      ->delimiter(',')
      ->required();
  structured->add_option("--n", structured_opts.sizes, "network sizes")->delimiter(',')->required();
  structured->add_option("--rho", structured_opts.rhos, "lambda_e over lambda")->delimiter(',');
  CLI::Option* structured_lambda =
      structured->add_option("--lambda", structured_opts.lambda, "per-node gossip rate");
  CLI::Option* structured_lambda_e =
      structured->add_option("--lambda-e", structured_opts.lambda_e, "source self-update rate");
  add_common(structured, structured_opts.common);

  ClusteredOpts clustered_opts;
  CLI::App* clustered = app.add_subcommand("clustered", "end-node freshness of two-tier layouts");
  clustered->add_option("--topology", clustered_opts.topologies, "cluster-internal topology")
      ->delimiter(',')
      ->required();
  clustered->add_option("--n", clustered_opts.n, "total end nodes")->required();
  clustered->add_option("--k", clustered_opts.ks, "cluster sizes")->delimiter(',')->required();
  clustered->add_option("--lambda-s", clustered_opts.lambda_s, "source-to-heads total rate")
      ->required();
  clustered->add_option("--lambda-c", clustered_opts.lambda_c, "head-to-cluster total rate")
      ->required();
  clustered->add_option("--lambda", clustered_opts.lambda, "per-node gossip rate")->required();
  clustered->add_option("--lambda-e", clustered_opts.lambda_e, "source self-update rate")
      ->required();
  add_common(clustered, clustered_opts.common);

  ScalingOpts scaling_opts;
  CLI::App* scaling = app.add_subcommand("scaling", "freshness decay across network sizes");
  scaling->add_option("--topology", scaling_opts.topologies, "layouts to sweep")
      ->delimiter(',')
      ->required();
  scaling->add_option("--rho", scaling_opts.rhos, "lambda_e over lambda")
      ->delimiter(',')
      ->required();
  scaling->add_option("--n", scaling_opts.sizes, "network sizes")->delimiter(',')->required();
  add_common(scaling, scaling_opts.common);

  OptimizeOpts optimize_opts;
  CLI::App* optimize =
      app.add_subcommand("optimize-cluster", "best cluster size among the divisors of n");
  optimize->add_option("--topology", optimize_opts.topologies, "cluster-internal topology")
      ->delimiter(',')
      ->required();
  optimize->add_option("--n", optimize_opts.n, "total end nodes")->required();
  optimize->add_option("--lambda-s", optimize_opts.lambda_s, "source-to-heads total rate")
      ->required();
  optimize->add_option("--lambda-c", optimize_opts.lambda_c, "head-to-cluster total rate")
      ->required();
  optimize->add_option("--lambda", optimize_opts.lambda, "per-node gossip rate")->required();
  optimize->add_option("--lambda-e", optimize_opts.lambda_e, "source self-update rate")
      ->required();
  add_common(optimize, optimize_opts.common);

  SimulateOpts simulate_opts;
  gf_sim_config_default(&simulate_opts.cfg);
  CLI::App* simulate = app.add_subcommand("simulate", "stochastic freshness estimate");
  CLI::Option* sim_graph =
      simulate->add_option("--graph", simulate_opts.graph, "network description file");
  CLI::Option* sim_topology =
      simulate->add_option("--topology", simulate_opts.topology, "generated layout");
  sim_graph->excludes(sim_topology);
  CLI::Option* sim_n = simulate->add_option("--n", simulate_opts.n, "network size");
  CLI::Option* sim_k =
      simulate->add_option("--k", simulate_opts.k, "cluster size (two-tier layout)");
  CLI::Option* sim_lambda =
      simulate->add_option("--lambda", simulate_opts.lambda, "per-node gossip rate");
  CLI::Option* sim_lambda_e =
      simulate->add_option("--lambda-e", simulate_opts.lambda_e, "source self-update rate");
  CLI::Option* sim_lambda_s =
      simulate->add_option("--lambda-s", simulate_opts.lambda_s, "source-to-heads total rate");
  CLI::Option* sim_lambda_c =
      simulate->add_option("--lambda-c", simulate_opts.lambda_c, "head-to-cluster total rate");
  simulate->add_option("--node", simulate_opts.nodes, "restrict output to these nodes")
      ->delimiter(',');
  simulate->add_option("--horizon", simulate_opts.cfg.horizon, "simulated time per replication");
  simulate->add_option("--warmup", simulate_opts.cfg.warmup, "discarded prefix");
  simulate->add_option("--reps", simulate_opts.cfg.replications, "replication count");
  simulate->add_option("--seed", simulate_opts.cfg.seed, "base seed");
  add_common(simulate, simulate_opts.common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  structured_opts.have_lambda = structured_lambda->count() > 0;
  structured_opts.have_lambda_e = structured_lambda_e->count() > 0;
  simulate_opts.have_n = sim_n->count() > 0;
  simulate_opts.have_k = sim_k->count() > 0;
  simulate_opts.have_lambda = sim_lambda->count() > 0;
  simulate_opts.have_lambda_e = sim_lambda_e->count() > 0;
  simulate_opts.have_lambda_s = sim_lambda_s->count() > 0;
  simulate_opts.have_lambda_c = sim_lambda_c->count() > 0;

  // flag-combination problems are usage errors; anything later is a
  // computation failure
  try {
    if (app.got_subcommand(structured)) resolve_rhos(structured_opts);
    if (app.got_subcommand(simulate)) {
      if (simulate_opts.graph.empty() == simulate_opts.topology.empty()) {
        err << "error: simulate needs exactly one of --graph or --topology\n";
        return 2;
      }
      if (!simulate_opts.topology.empty()) {
        if (!(simulate_opts.have_n && simulate_opts.have_lambda && simulate_opts.have_lambda_e)) {
          err << "error: generated layouts need --n, --lambda, and --lambda-e\n";
          return 2;
        }
        topology_value(simulate_opts.topology);
        if (simulate_opts.have_k &&
            !(simulate_opts.have_lambda_s && simulate_opts.have_lambda_c)) {
          err << "error: clustered runs need --lambda-s and --lambda-c\n";
          return 2;
        }
        if (!simulate_opts.have_k &&
            (simulate_opts.have_lambda_s || simulate_opts.have_lambda_c)) {
          err << "error: head rates only apply to clustered runs (--k)\n";
          return 2;
        }
      }
      if (!simulate_opts.graph.empty() &&
          (simulate_opts.have_n || simulate_opts.have_k || simulate_opts.have_lambda ||
           simulate_opts.have_lambda_e || simulate_opts.have_lambda_s ||
           simulate_opts.have_lambda_c)) {
        err << "error: layout flags do not apply when --graph is given\n";
        return 2;
      }
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (app.got_subcommand(solve)) return run_solve(solve_opts, out, err);
    if (app.got_subcommand(structured)) return run_structured(structured_opts, out, err);
    if (app.got_subcommand(clustered)) return run_clustered(clustered_opts, out, err);
    if (app.got_subcommand(scaling)) return run_scaling(scaling_opts, out, err);
    if (app.got_subcommand(optimize)) return run_optimize(optimize_opts, out, err);
    if (app.got_subcommand(simulate)) return run_simulate(simulate_opts, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace gossipcli
