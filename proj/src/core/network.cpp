#include "core/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gossip {

namespace {

bool parse_double_token(const std::string& tok, double& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

bool parse_int_token(const std::string& tok, int& out) {
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

void append_number(std::string& out, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

ParseError::ParseError(int line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
      line(line_number) {}

GossipNetwork::GossipNetwork(int n, double lambda_e, std::vector<double> source_rates,
                             const std::vector<Edge>& edges)
    : n_(n), lambda_e_(lambda_e), source_rates_(std::move(source_rates)) {
  if (n_ < 1) throw std::invalid_argument("network needs at least one node");
  if (!(std::isfinite(lambda_e_) && lambda_e_ > 0.0))
    throw std::invalid_argument("lambda_e must be positive and finite");
  if (static_cast<int>(source_rates_.size()) != n_)
    throw std::invalid_argument("source rate vector length must equal node count");

  total_source_rate_ = 0.0;
  for (double r : source_rates_) {
    if (!(std::isfinite(r) && r >= 0.0))
      throw std::invalid_argument("source rates must be nonnegative and finite");
    total_source_rate_ += r;
  }

  out_.resize(n_);
  in_.resize(n_);
  for (const Edge& e : edges) {
    if (e.from < 0 || e.from >= n_ || e.to < 0 || e.to >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.from == e.to) throw std::invalid_argument("self gossip edges are not allowed");
    if (!(std::isfinite(e.rate) && e.rate >= 0.0))
      throw std::invalid_argument("edge rates must be nonnegative and finite");
  }

  // Duplicate detection covers zero-rate edges too, but only positive rates
  // are kept in adjacency.
  std::vector<std::pair<NodeId, NodeId>> seen;
  seen.reserve(edges.size());
  for (const Edge& e : edges) seen.emplace_back(e.from, e.to);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("duplicate edge");

  edges_.reserve(edges.size());
  for (const Edge& e : edges)
    if (e.rate > 0.0) edges_.push_back(e);
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  for (const Edge& e : edges_) {
    out_[e.from].emplace_back(e.to, e.rate);
    in_[e.to].emplace_back(e.from, e.rate);
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

void GossipNetwork::check_node(NodeId i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("node index out of range");
}

double GossipNetwork::source_rate(NodeId j) const {
  check_node(j);
  return source_rates_[j];
}

double GossipNetwork::gossip_rate(NodeId i, NodeId j) const {
  check_node(i);
  check_node(j);
  const auto& row = out_[i];
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const std::pair<NodeId, double>& p, NodeId key) { return p.first < key; });
  return it != row.end() && it->first == j ? it->second : 0.0;
}

const std::vector<std::pair<NodeId, double>>& GossipNetwork::out_edges(NodeId i) const {
  check_node(i);
  return out_[i];
}

const std::vector<std::pair<NodeId, double>>& GossipNetwork::in_edges(NodeId j) const {
  check_node(j);
  return in_[j];
}

NodeSet GossipNetwork::all_nodes() const {
  if (n_ > NodeSet::kCapacity)
    throw CapacityError("network exceeds the set capacity of " +
                        std::to_string(NodeSet::kCapacity) + " nodes");
  return NodeSet::first_n(n_);
}

void GossipNetwork::require_valid_set(NodeSet s) const {
  if (s.empty()) throw std::invalid_argument("node set must be nonempty");
  if (!s.subset_of(all_nodes())) throw std::invalid_argument("node set contains an index out of range");
}

double source_rate_into_set(const GossipNetwork& net, NodeSet s) {
  net.require_valid_set(s);
  double total = 0.0;
  s.for_each([&](NodeId j) { total += net.source_rate(j); });
  return total;
}

double node_rate_into_set(const GossipNetwork& net, NodeId i, NodeSet s) {
  net.require_valid_set(s);
  if (s.contains(i)) throw std::invalid_argument("node must lie outside the set");
  double total = 0.0;
  for (const auto& [to, rate] : net.out_edges(i))
    if (s.contains(to)) total += rate;
  return total;
}

NodeSet updating_neighbors(const GossipNetwork& net, NodeSet s) {
  net.require_valid_set(s);
  NodeSet result;
  s.for_each([&](NodeId j) {
    for (const auto& [from, rate] : net.in_edges(j)) {
      (void)rate;  // adjacency stores positive rates only
      if (!s.contains(from)) result = result.with(from);
    }
  });
  return result;
}

GossipNetwork parse_network(const std::string& text) {
  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;

  bool have_header = false;
  int n = 0;
  double lambda_e = 0.0;
  std::vector<double> src;
  std::vector<bool> src_seen;
  std::vector<Edge> edges;
  std::vector<std::pair<NodeId, NodeId>> edge_keys;

  while (std::getline(stream, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok[0] != "net") throw ParseError(line_no, "expected 'net <n> <lambda_e>' first");
      if (tok.size() != 3) throw ParseError(line_no, "'net' takes a node count and lambda_e");
      if (!parse_int_token(tok[1], n) || n < 1)
        throw ParseError(line_no, "bad node count '" + tok[1] + "'");
      if (!parse_double_token(tok[2], lambda_e) || lambda_e <= 0.0)
        throw ParseError(line_no, "bad lambda_e '" + tok[2] + "'");
      src.assign(n, 0.0);
      src_seen.assign(n, false);
      have_header = true;
      continue;
    }

    if (tok[0] == "net") throw ParseError(line_no, "duplicate 'net' line");

    if (tok[0] == "src") {
      if (tok.size() != 3) throw ParseError(line_no, "'src' takes a node and a rate");
      int j;
      double rate;
      if (!parse_int_token(tok[1], j) || j < 0 || j >= n)
        throw ParseError(line_no, "bad node '" + tok[1] + "'");
      if (!parse_double_token(tok[2], rate) || rate < 0.0)
        throw ParseError(line_no, "bad rate '" + tok[2] + "'");
      if (src_seen[j]) throw ParseError(line_no, "duplicate source rate for node " + tok[1]);
      src_seen[j] = true;
      src[j] = rate;
      continue;
    }

    if (tok[0] == "edge") {
      if (tok.size() != 4) throw ParseError(line_no, "'edge' takes two nodes and a rate");
      int i, j;
      double rate;
      if (!parse_int_token(tok[1], i) || i < 0 || i >= n)
        throw ParseError(line_no, "bad node '" + tok[1] + "'");
      if (!parse_int_token(tok[2], j) || j < 0 || j >= n)
        throw ParseError(line_no, "bad node '" + tok[2] + "'");
      if (i == j) throw ParseError(line_no, "self edges are not allowed");
      if (!parse_double_token(tok[3], rate) || rate < 0.0)
        throw ParseError(line_no, "bad rate '" + tok[3] + "'");
      auto key = std::make_pair(i, j);
      if (std::find(edge_keys.begin(), edge_keys.end(), key) != edge_keys.end())
        throw ParseError(line_no, "duplicate edge " + tok[1] + " -> " + tok[2]);
      edge_keys.push_back(key);
      edges.push_back({i, j, rate});
      continue;
    }

    throw ParseError(line_no, "unknown keyword '" + tok[0] + "'");
  }

  if (!have_header) throw ParseError(0, "missing 'net' header");
  return GossipNetwork(n, lambda_e, std::move(src), edges);
}

GossipNetwork load_network(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_network(buffer.str());
}

std::string format_network(const GossipNetwork& net) {
  std::string out = "net " + std::to_string(net.node_count()) + " ";
  append_number(out, net.lambda_e());
  out += '\n';
  for (NodeId j = 0; j < net.node_count(); ++j) {
    if (net.source_rate(j) > 0.0) {
      out += "src " + std::to_string(j) + " ";
      append_number(out, net.source_rate(j));
      out += '\n';
    }
  }
  for (const Edge& e : net.edges()) {
    out += "edge " + std::to_string(e.from) + " " + std::to_string(e.to) + " ";
    append_number(out, e.rate);
    out += '\n';
  }
  return out;
}

}  // namespace gossip
