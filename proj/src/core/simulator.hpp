#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "core/network.hpp"

namespace gossip {

// One jump of the freshness process: the source refreshing itself (staling
// every node), the source updating one node, or node-to-node gossip.
struct Transition {
  enum class Kind { kSourceSelf, kSourceToNode, kNodeToNode };
  Kind kind = Kind::kSourceSelf;
  NodeId from = -1;  // -1 stands for the source
  NodeId to = -1;    // -1 for the source's self-update
};

// Merged-clock event sampler: one exponential dwell at the summed rate, then
// a categorical pick proportional to each transition's rate. Zero-rate
// transitions never enter the table.
class EventSampler {
 public:
  explicit EventSampler(const GossipNetwork& net);

  double total_rate() const { return total_rate_; }
  std::size_t transition_count() const { return transitions_.size(); }
  const Transition& transition(std::size_t idx) const { return transitions_[idx]; }

  std::pair<double, Transition> next(std::mt19937_64& rng) const;

 private:
  std::vector<Transition> transitions_;
  std::vector<double> cumulative_;
  double total_rate_ = 0.0;
};

// Right-continuous freshness state. Time credit for an interval is taken at
// the pre-jump state: advance() first, then apply_transition().
struct SimState {
  explicit SimState(int node_count);

  std::vector<std::uint8_t> fresh;
  std::vector<double> integral;
  double clock = 0.0;

  void advance(double dwell);
};

void apply_transition(SimState& state, const Transition& t);

struct SimConfig {
  double horizon = 1e4;
  double warmup = 1e2;
  int replications = 20;
  std::uint64_t seed = 1;
};

struct SimEstimate {
  std::vector<double> mean;  // per node, or a single entry for set estimates
  std::vector<double> se;    // sample std over replications / sqrt(count)
  int replications = 0;
};

// Time-average freshness of every node over [warmup, horizon], averaged
// across independent replications.
SimEstimate simulate(const GossipNetwork& net, const SimConfig& cfg);

// Same trajectory-wise run, tracking whether any node of s is fresh. With a
// singleton set this reproduces the per-node estimate bit for bit.
SimEstimate simulate_set(const GossipNetwork& net, NodeSet s, const SimConfig& cfg);

// Substream seed for one replication; decorrelates nearby base seeds.
std::uint64_t replication_seed(std::uint64_t seed, int replication);

}  // namespace gossip
