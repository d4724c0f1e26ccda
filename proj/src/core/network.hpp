#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gossip {

using NodeId = int;

// Subset of node indices backed by a 64-bit mask. Set-valued queries
// (updating neighbors, subset freshness, set simulation) therefore require
// networks with at most kCapacity nodes; plain per-node operations do not.
class NodeSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr NodeSet() = default;

  static constexpr NodeSet from_mask(std::uint64_t bits) { return NodeSet(bits); }

  static NodeSet single(NodeId i) {
    check_index(i);
    return NodeSet(std::uint64_t{1} << i);
  }

  // {0, ..., n-1}
  static NodeSet first_n(int n) {
    if (n < 0 || n > kCapacity) throw std::invalid_argument("NodeSet: node count out of range");
    if (n == kCapacity) return NodeSet(~std::uint64_t{0});
    return NodeSet((std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  bool contains(NodeId i) const { return i >= 0 && i < kCapacity && (bits_ >> i & 1) != 0; }

  NodeSet with(NodeId i) const {
    check_index(i);
    return NodeSet(bits_ | std::uint64_t{1} << i);
  }

  NodeSet without(NodeId i) const {
    check_index(i);
    return NodeSet(bits_ & ~(std::uint64_t{1} << i));
  }

  bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  constexpr bool operator==(const NodeSet&) const = default;

  // Visits members in ascending index order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) fn(static_cast<NodeId>(std::countr_zero(m)));
  }

 private:
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}

  static void check_index(NodeId i) {
    if (i < 0 || i >= kCapacity) throw std::invalid_argument("NodeSet: node index out of range");
  }

  std::uint64_t bits_ = 0;
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  double rate = 0.0;
};

// Raised when a computation would exceed a hard size limit (solver node cap,
// NodeSet capacity).
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed network text; line is 1-based, 0 for file-level problems.
struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message);
  int line;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable gossip network: a source that replaces its information as a
// Poisson process with rate lambda_e, per-node source update rates, and a
// directed node-to-node update rate matrix with zero diagonal. Construction
// validates everything; zero-rate edges are dropped so adjacency only holds
// strictly positive rates. Safe to share across threads once built.
class GossipNetwork {
 public:
  GossipNetwork(int n, double lambda_e, std::vector<double> source_rates,
                const std::vector<Edge>& edges);

  int node_count() const { return n_; }
  double lambda_e() const { return lambda_e_; }
  double source_rate(NodeId j) const;
  double gossip_rate(NodeId i, NodeId j) const;  // 0 when no edge is stored
  double total_source_rate() const { return total_source_rate_; }

  // True when no node receives direct source updates; every freshness is 0.
  bool degenerate() const { return total_source_rate_ == 0.0; }

  // Positive-rate edges sorted by (from, to).
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<std::pair<NodeId, double>>& out_edges(NodeId i) const;
  const std::vector<std::pair<NodeId, double>>& in_edges(NodeId j) const;

  NodeSet all_nodes() const;

  // Throws unless s is a nonempty subset of {0, ..., n-1}.
  void require_valid_set(NodeSet s) const;

 private:
  void check_node(NodeId i) const;

  int n_;
  double lambda_e_;
  double total_source_rate_;
  std::vector<double> source_rates_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<NodeId, double>>> out_;
  std::vector<std::vector<std::pair<NodeId, double>>> in_;
};

// Total source rate into s: sum of lambda_{s,j} over j in s.
double source_rate_into_set(const GossipNetwork& net, NodeSet s);

// Total rate from node i into s: sum of lambda_{ij} over j in s. i must lie
// outside s.
double node_rate_into_set(const GossipNetwork& net, NodeId i, NodeSet s);

// Nodes outside s with positive total rate into s.
NodeSet updating_neighbors(const GossipNetwork& net, NodeSet s);

// Text format, line oriented, '#' starts a comment:
//   net <n> <lambda_e>
//   src <j> <rate>
//   edge <i> <j> <rate>
GossipNetwork parse_network(const std::string& text);
GossipNetwork load_network(const std::string& path);
std::string format_network(const GossipNetwork& net);

}  // namespace gossip
