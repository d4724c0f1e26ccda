#include "core/simulator.hpp"

#include <algorithm>
#include <cmath>

namespace gossip {

namespace {

// 53 uniform bits in [0, 1); paired with -log1p(-u) this gives the same
// exponential draws on every platform, unlike std::exponential_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(const GossipNetwork& net, const SimConfig& cfg) {
  if (!(std::isfinite(cfg.horizon) && cfg.horizon > 0.0))
    throw std::invalid_argument("horizon must be positive and finite");
  if (!(std::isfinite(cfg.warmup) && cfg.warmup >= 0.0))
    throw std::invalid_argument("warmup must be nonnegative and finite");
  if (cfg.warmup >= cfg.horizon) throw std::invalid_argument("warmup must end before the horizon");
  if (cfg.replications < 1) throw std::invalid_argument("need at least one replication");
  (void)net;
}

struct Replication {
  std::vector<double> node_average;
  double set_average = 0.0;
};

// One trajectory. Every replication consumes an identical draw sequence
// whether or not a set is tracked, so set estimates line up with node
// estimates from the same seed.
Replication run_replication(const GossipNetwork& net, const EventSampler& sampler,
                            const SimConfig& cfg, std::uint64_t seed, const NodeSet* set) {
  std::mt19937_64 rng(seed);
  SimState state(net.node_count());
  const double window = cfg.horizon - cfg.warmup;
  double set_integral = 0.0;
  bool set_fresh = false;

  while (state.clock < cfg.horizon) {
    auto [dwell, transition] = sampler.next(rng);
    const double start = state.clock;
    const double stop = start + dwell;
    const double lo = std::max(start, cfg.warmup);
    const double hi = std::min(stop, cfg.horizon);
    if (hi > lo) {
      const double credit = hi - lo;
      for (int j = 0; j < net.node_count(); ++j)
        if (state.fresh[j]) state.integral[j] += credit;
      if (set != nullptr && set_fresh) set_integral += credit;
    }
    state.clock = stop;
    if (state.clock >= cfg.horizon) break;
    apply_transition(state, transition);
    if (set != nullptr) {
      set_fresh = false;
      set->for_each([&](NodeId j) { set_fresh = set_fresh || state.fresh[j] != 0; });
    }
  }

  Replication rep;
  rep.node_average.resize(net.node_count());
  for (int j = 0; j < net.node_count(); ++j) rep.node_average[j] = state.integral[j] / window;
  rep.set_average = set_integral / window;
  return rep;
}

SimEstimate aggregate(const std::vector<std::vector<double>>& samples, int replications) {
  const std::size_t width = samples.front().size();
  SimEstimate est;
  est.replications = replications;
  est.mean.assign(width, 0.0);
  est.se.assign(width, 0.0);
  for (const auto& rep : samples)
    for (std::size_t j = 0; j < width; ++j) est.mean[j] += rep[j];
  for (double& m : est.mean) m /= replications;
  if (replications < 2) return est;
  for (const auto& rep : samples)
    for (std::size_t j = 0; j < width; ++j) {
      const double d = rep[j] - est.mean[j];
      est.se[j] += d * d;
    }
  for (double& s : est.se) s = std::sqrt(s / (replications - 1)) / std::sqrt(double(replications));
  return est;
}

}  // namespace

EventSampler::EventSampler(const GossipNetwork& net) {
  double cum = net.lambda_e();
  transitions_.push_back({Transition::Kind::kSourceSelf, -1, -1});
  cumulative_.push_back(cum);
  for (NodeId j = 0; j < net.node_count(); ++j) {
    if (net.source_rate(j) > 0.0) {
      cum += net.source_rate(j);
      transitions_.push_back({Transition::Kind::kSourceToNode, -1, j});
      cumulative_.push_back(cum);
    }
  }
  for (const Edge& e : net.edges()) {
    cum += e.rate;
    transitions_.push_back({Transition::Kind::kNodeToNode, e.from, e.to});
    cumulative_.push_back(cum);
  }
  total_rate_ = cum;
}

std::pair<double, Transition> EventSampler::next(std::mt19937_64& rng) const {
  const double dwell = -std::log1p(-uniform01(rng)) / total_rate_;
  const double target = uniform01(rng) * total_rate_;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  std::size_t idx = static_cast<std::size_t>(it - cumulative_.begin());
  if (idx >= transitions_.size()) idx = transitions_.size() - 1;  // float edge at the top
  return {dwell, transitions_[idx]};
}

SimState::SimState(int node_count)
    : fresh(static_cast<std::size_t>(node_count), 0),
      integral(static_cast<std::size_t>(node_count), 0.0) {
  if (node_count < 1) throw std::invalid_argument("state needs at least one node");
}

void SimState::advance(double dwell) {
  if (!(std::isfinite(dwell) && dwell >= 0.0))
    throw std::invalid_argument("dwell must be nonnegative and finite");
  for (std::size_t j = 0; j < fresh.size(); ++j)
    if (fresh[j]) integral[j] += dwell;
  clock += dwell;
}

void apply_transition(SimState& state, const Transition& t) {
  switch (t.kind) {
    case Transition::Kind::kSourceSelf:
      std::fill(state.fresh.begin(), state.fresh.end(), std::uint8_t{0});
      break;
    case Transition::Kind::kSourceToNode:
      state.fresh[t.to] = 1;
      break;
    case Transition::Kind::kNodeToNode:
      state.fresh[t.to] = std::max(state.fresh[t.to], state.fresh[t.from]);
      break;
  }
}

std::uint64_t replication_seed(std::uint64_t seed, int replication) {
  // splitmix64 over (seed, index) so base seeds 1,2,3,... stay uncorrelated
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(replication + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

SimEstimate simulate(const GossipNetwork& net, const SimConfig& cfg) {
  validate(net, cfg);
  const EventSampler sampler(net);
  std::vector<std::vector<double>> samples;
  samples.reserve(cfg.replications);
  for (int r = 0; r < cfg.replications; ++r)
    samples.push_back(
        run_replication(net, sampler, cfg, replication_seed(cfg.seed, r), nullptr).node_average);
  return aggregate(samples, cfg.replications);
}

SimEstimate simulate_set(const GossipNetwork& net, NodeSet s, const SimConfig& cfg) {
  validate(net, cfg);
  net.require_valid_set(s);
  const EventSampler sampler(net);
  std::vector<std::vector<double>> samples;
  samples.reserve(cfg.replications);
  for (int r = 0; r < cfg.replications; ++r) {
    const Replication rep = run_replication(net, sampler, cfg, replication_seed(cfg.seed, r), &s);
    samples.push_back({rep.set_average});
  }
  return aggregate(samples, cfg.replications);
}

}  // namespace gossip
