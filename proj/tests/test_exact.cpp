#include <doctest.h>

#include <random>

#include "core/exact.hpp"
#include "core/network.hpp"
#include "support/oracles.hpp"

using namespace gossip;
using testsupport::rel_err;
using testsupport::uniform;

namespace {

GossipNetwork reference_graph() {
  return GossipNetwork(4, 1.0, {0.9, 0.0, 0.4, 0.0},
                       {{0, 1, 1.1}, {1, 2, 0.7}, {2, 3, 1.3}, {3, 0, 0.2}, {0, 2, 0.05}});
}

}  // namespace

TEST_CASE("per-node values of the reference graph") {
  const GossipNetwork net = reference_graph();
  const std::vector<double> f = freshness_all_nodes(net);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == doctest::Approx(0.47722567287784684).epsilon(1e-12));
  CHECK(f[1] == doctest::Approx(0.24997535245982455).epsilon(1e-12));
  CHECK(f[2] == doctest::Approx(0.33325402961993705).epsilon(1e-12));
  CHECK(f[3] == doctest::Approx(0.1883609732634427).epsilon(1e-12));
}

TEST_CASE("set freshness dominates every member") {
  const GossipNetwork net = reference_graph();
  RecursionCache cache;
  const double f13 = freshness_of_set(net, NodeSet::from_mask(0b1010), cache);
  CHECK(f13 == doctest::Approx(0.32272077629005574).epsilon(1e-12));
  CHECK(f13 >= freshness_of_set(net, NodeSet::single(1), cache));
  CHECK(f13 >= freshness_of_set(net, NodeSet::single(3), cache));
}

TEST_CASE("the whole network only sees the total source rate") {
  const GossipNetwork net = reference_graph();
  const double expected = 1.3 / (1.0 + 1.3);
  CHECK(freshness_of_set(net, net.all_nodes()) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("networks without source contact are never fresh") {
  const GossipNetwork net(3, 2.0, {0.0, 0.0, 0.0}, {{0, 1, 1.0}, {1, 2, 0.5}});
  CHECK(net.degenerate());
  const std::vector<double> f = freshness_all_nodes(net);
  for (double v : f) CHECK(v == 0.0);
  CHECK(freshness_of_set(net, NodeSet::from_mask(0b111)) == 0.0);
}

TEST_CASE("cache reuse keeps answers identical") {
  const GossipNetwork net = reference_graph();
  RecursionCache cache;
  const double first = freshness_of_set(net, NodeSet::single(1), cache);
  const std::size_t filled = cache.size();
  CHECK(filled > 0);
  const double second = freshness_of_set(net, NodeSet::single(1), cache);
  CHECK(first == second);
  CHECK(cache.size() == filled);
  cache.clear();
  CHECK(cache.size() == 0);
  CHECK(cache.find(NodeSet::single(1)) == nullptr);
}

TEST_CASE("the recursion is capped by the cache limit") {
  std::vector<double> src(30, 0.1);
  const GossipNetwork wide(30, 1.0, src, {});
  CHECK_THROWS_AS(freshness_of_set(wide, NodeSet::single(0)), CapacityError);
  RecursionCache roomy(32);
  CHECK(freshness_of_set(wide, NodeSet::single(0), roomy) ==
        doctest::Approx(0.1 / 1.1).epsilon(1e-14));
  CHECK_THROWS_AS(RecursionCache(0), std::invalid_argument);
  CHECK_THROWS_AS(RecursionCache(65), std::invalid_argument);
}

TEST_CASE("closed forms reproduce pinned examples") {
  CHECK(serial_line_freshness(1.0, 1.0, 1.0) == 0.25);
  CHECK(serial_line_freshness(1.0, 2.0, 3.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(parallel_cache_freshness(1, 1, 1, 1, 1) ==
        doctest::Approx(0.37037037037037035).epsilon(1e-15));
  CHECK(parallel_cache_freshness(1, 1, 2, 3, 4) ==
        doctest::Approx(0.6041666666666666).epsilon(1e-15));
  CHECK(mixed_example_freshness(1, 1, 1, 1, 1) ==
        doctest::Approx(0.2777777777777778).epsilon(1e-15));
  CHECK(mixed_example_freshness(1, 1, 1, 1, 0) == 0.25);
  CHECK(mixed_example_freshness(1, 2, 1, 3, 0.5) ==
        doctest::Approx(0.3733333333333334).epsilon(1e-15));

  CHECK_THROWS_AS(serial_line_freshness(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(parallel_cache_freshness(1, 1, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(mixed_example_freshness(1, 1, 1, 1, -0.5), std::invalid_argument);
}

TEST_CASE("closed forms agree with the general solver") {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double le = uniform(rng, 0.1, 3.0);
    const double a = uniform(rng, 0.1, 3.0);
    const double b = uniform(rng, 0.1, 3.0);
    const double c = uniform(rng, 0.1, 3.0);
    const double d = uniform(rng, 0.1, 3.0);
    const double lam = trial % 5 == 0 ? 0.0 : uniform(rng, 0.1, 2.0);

    const GossipNetwork serial = serial_line_network(le, a, b);
    worst = std::max(worst, rel_err(freshness_of_set(serial, NodeSet::single(1)),
                                    serial_line_freshness(le, a, b)));

    const GossipNetwork parallel = parallel_cache_network(le, a, b, c, d);
    worst = std::max(worst, rel_err(freshness_of_set(parallel, NodeSet::single(2)),
                                    parallel_cache_freshness(le, a, b, c, d)));

    const GossipNetwork mixed = mixed_example_network(le, a, b, c, lam);
    worst = std::max(worst, rel_err(freshness_of_set(mixed, NodeSet::single(2)),
                                    mixed_example_freshness(le, a, b, c, lam)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("the recursion matches the dense chain oracle") {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const GossipNetwork net = testsupport::random_network(rng, 6, true);
    RecursionCache cache;
    const std::uint64_t full = net.all_nodes().mask();
    std::uint64_t mask = 1 + rng() % full;  // nonempty subset
    worst = std::max(worst, rel_err(freshness_of_set(net, NodeSet::from_mask(mask), cache),
                                    testsupport::ctmc_set_freshness(net, mask)));
    for (NodeId j = 0; j < net.node_count(); ++j)
      worst = std::max(worst, rel_err(freshness_of_set(net, NodeSet::single(j), cache),
                                      testsupport::ctmc_set_freshness(net, 1ull << j)));
  }
  CHECK(worst <= 1e-9);
}
