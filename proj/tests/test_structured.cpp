#include <doctest.h>

#include <cmath>

#include "core/exact.hpp"
#include "core/structured.hpp"
#include "support/oracles.hpp"

using namespace gossip;
using testsupport::rel_err;

TEST_CASE("topology names round trip") {
  Topology t;
  CHECK(topology_from_name("ring", t));
  CHECK(t == Topology::kRing);
  CHECK(topology_from_name("disconnected", t));
  CHECK(t == Topology::kDisconnected);
  CHECK(topology_from_name("full", t));
  CHECK(t == Topology::kFull);
  CHECK(!topology_from_name("mesh", t));
  CHECK(std::string(topology_name(Topology::kRing)) == "ring");
}

TEST_CASE("pinned single-node values") {
  CHECK(disconnected_freshness(1, 1.0) == 0.5);
  CHECK(disconnected_freshness(6, 2.0) == doctest::Approx(1.0 / 13).epsilon(1e-15));
  CHECK(disconnected_freshness(7, 1.3) == doctest::Approx(0.09900990099009901).epsilon(1e-15));
  CHECK(ring_freshness(2, 1.0) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(ring_freshness(3, 1.0) == doctest::Approx(37.0 / 112).epsilon(1e-14));
  CHECK(ring_freshness(5, 0.7) == doctest::Approx(0.3314039574639925).epsilon(1e-14));
  CHECK(full_freshness(2, 1.0) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(full_freshness(3, 1.0) == doctest::Approx(37.0 / 112).epsilon(1e-14));
  CHECK(full_freshness(5, 0.7) == doctest::Approx(0.34162895927601816).epsilon(1e-14));

  CHECK(structured_freshness(Topology::kDisconnected, 6, 2.0) == disconnected_freshness(6, 2.0));
  CHECK(structured_freshness(Topology::kRing, 5, 0.7) == ring_freshness(5, 0.7));
  CHECK(structured_freshness(Topology::kFull, 5, 0.7) == full_freshness(5, 0.7));

  CHECK_THROWS_AS(ring_freshness(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(full_freshness(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(disconnected_freshness(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(disconnected_freshness(5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ring_freshness(5, -1.0), std::invalid_argument);
}

TEST_CASE("series forms agree with the recursions") {
  const long long sizes[] = {2, 3, 5, 10, 100, 1000};
  const double rhos[] = {0.5, 1.0, 2.0};
  double worst = 0.0;
  for (long long n : sizes)
    for (double rho : rhos) {
      worst = std::max(worst, rel_err(ring_freshness_series(n, rho), ring_freshness(n, rho)));
      worst = std::max(worst, rel_err(full_freshness_series(n, rho), full_freshness(n, rho)));
    }
  CHECK(worst <= 1e-12);
  CHECK(ring_freshness_series(5, 0.7) == doctest::Approx(0.33140395746399254).epsilon(1e-14));
  CHECK(full_freshness_series(5, 0.7) == doctest::Approx(0.34162895927601805).epsilon(1e-14));

  // no overflow or underflow at the large end
  const double tiny = ring_freshness_series(100000, 0.5);
  CHECK(tiny > 0.0);
  CHECK(std::isfinite(tiny));
  CHECK(std::isfinite(full_freshness_series(100000, 2.0)));
}

TEST_CASE("individual series terms") {
  CHECK(ring_series_term(5, 1.0, 2) == doctest::Approx(0.07575757575757576).epsilon(1e-14));
  CHECK(full_series_term(5, 1.0, 2) == doctest::Approx(0.06269592476489029).epsilon(1e-14));
  // two nodes, single term: 1 / (3 + 2 rho)
  CHECK(full_series_term(2, 1.0, 1) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(full_series_term(2, 0.5, 1) == doctest::Approx(0.25).epsilon(1e-14));

  // terms plus the closing piece reconstruct the series totals
  for (double rho : {0.5, 1.0, 2.0}) {
    const long long n = 7;
    double total_ring = 0.0, total_full = 0.0;
    for (long long i = 1; i <= n - 1; ++i) {
      total_ring += ring_series_term(n, rho, i);
      total_full += full_series_term(n, rho, i);
    }
    const double close = static_cast<double>(n) / static_cast<double>(n - 1) / (1.0 + rho);
    total_ring += close * ring_series_term(n, rho, n - 1);
    total_full += close * full_series_term(n, rho, n - 1);
    CHECK(rel_err(total_ring, ring_freshness(n, rho)) <= 1e-13);
    CHECK(rel_err(total_full, full_freshness(n, rho)) <= 1e-13);
  }

  CHECK_THROWS_AS(ring_series_term(5, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ring_series_term(5, 1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(full_series_term(5, 1.0, -1), std::invalid_argument);
}

TEST_CASE("nested-set chains descend from the whole network") {
  const std::vector<double> ring = ring_freshness_chain(4, 1.0);
  REQUIRE(ring.size() == 4);
  CHECK(ring[0] == doctest::Approx(0.28080808080808084).epsilon(1e-14));
  CHECK(ring[1] == doctest::Approx(0.38181818181818183).epsilon(1e-14));
  CHECK(ring[2] == doctest::Approx(0.45454545454545453).epsilon(1e-14));
  CHECK(ring[3] == 0.5);
  CHECK(ring[0] == ring_freshness(4, 1.0));
  for (std::size_t j = 1; j < ring.size(); ++j) CHECK(ring[j] > ring[j - 1]);

  const std::vector<double> full = full_freshness_chain(4, 1.0);
  REQUIRE(full.size() == 4);
  CHECK(full[3] == 0.5);
  CHECK(full[0] == full_freshness(4, 1.0));
  for (std::size_t j = 1; j < full.size(); ++j) CHECK(full[j] > full[j - 1]);
  // middle entry satisfies the one-step recursion
  const double share = 2.0 / 4.0;
  const double gossip = 2.0 * 2.0 / 3.0;
  CHECK(full[1] ==
        doctest::Approx((share + gossip * full[2]) / (1.0 + share + gossip)).epsilon(1e-14));
}

TEST_CASE("builders realize the advertised rates") {
  const GossipNetwork ring = build_structured({Topology::kRing, 5, 1.5, 0.7});
  CHECK(ring.node_count() == 5);
  CHECK(ring.lambda_e() == 0.7);
  for (NodeId j = 0; j < 5; ++j) CHECK(ring.source_rate(j) == doctest::Approx(0.3));
  CHECK(ring.gossip_rate(0, 1) == doctest::Approx(0.75));
  CHECK(ring.gossip_rate(0, 4) == doctest::Approx(0.75));
  CHECK(ring.gossip_rate(0, 2) == 0.0);
  CHECK(ring.out_edges(0).size() == 2);

  // two-node ring folds both directions onto one neighbor
  const GossipNetwork pair = build_structured({Topology::kRing, 2, 1.5, 0.7});
  CHECK(pair.gossip_rate(0, 1) == doctest::Approx(1.5));
  CHECK(pair.out_edges(0).size() == 1);

  const GossipNetwork full = build_structured({Topology::kFull, 4, 1.5, 0.7});
  for (NodeId i = 0; i < 4; ++i) {
    double total = 0.0;
    for (NodeId j = 0; j < 4; ++j) total += full.gossip_rate(i, j);
    CHECK(total == doctest::Approx(1.5));
    CHECK(full.out_edges(i).size() == 3);
  }

  const GossipNetwork lonely = build_structured({Topology::kDisconnected, 3, 1.5, 0.7});
  CHECK(lonely.edges().empty());

  CHECK_THROWS_AS(build_structured({Topology::kRing, 1, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_structured({Topology::kDisconnected, 0, 1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_structured({Topology::kFull, 4, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_structured({Topology::kFull, 4, 1.0, -2.0}), std::invalid_argument);
  CHECK_THROWS_AS(build_structured({Topology::kDisconnected, 3000000000LL, 1.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("built networks reproduce the formulas via the general solver") {
  double worst = 0.0;
  for (long long n = 2; n <= 9; ++n)
    for (double rho : {0.5, 2.0})
      for (Topology kind : {Topology::kDisconnected, Topology::kRing, Topology::kFull}) {
        const double lambda = 1.3;
        const GossipNetwork net = build_structured({kind, n, lambda, lambda * rho});
        const std::vector<double> nodes = freshness_all_nodes(net);
        const double expected = structured_freshness(kind, n, rho);
        for (double f : nodes) worst = std::max(worst, rel_err(f, expected));
      }
  CHECK(worst <= 1e-12);
}

TEST_CASE("asymptotic forms and branches") {
  CHECK(asymptotic_freshness(Topology::kDisconnected, 1000, 2.0) == doctest::Approx(5e-4));
  CHECK(asymptotic_freshness(Topology::kRing, 10000, 2.0) == doctest::Approx(7.5e-5));
  CHECK(asymptotic_freshness(Topology::kFull, 100, 0.5) == doctest::Approx(0.1));
  CHECK(asymptotic_freshness(Topology::kFull, 100, 1.0) ==
        doctest::Approx(std::log(100.0) / 100.0));
  CHECK(asymptotic_freshness(Topology::kFull, 100, 2.0) == doctest::Approx(0.01));
  CHECK_THROWS_AS(asymptotic_freshness(Topology::kRing, 1, 1.0), std::invalid_argument);

  // the exact values approach the leading forms
  CHECK(rel_err(disconnected_freshness(1000, 2.0),
                asymptotic_freshness(Topology::kDisconnected, 1000, 2.0)) <= 1e-3);
  CHECK(rel_err(ring_freshness(10000, 2.0),
                asymptotic_freshness(Topology::kRing, 10000, 2.0)) <= 1e-3);
}

TEST_CASE("scaling sweeps sort by size") {
  const std::vector<ScalingRow> rows = scaling_sweep(Topology::kRing, {100, 10, 50}, 1.0);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 10);
  CHECK(rows[1].n == 50);
  CHECK(rows[2].n == 100);
  for (const ScalingRow& row : rows) {
    CHECK(row.freshness == ring_freshness(row.n, 1.0));
    CHECK(row.inverse == 1.0 / row.freshness);
  }
  CHECK_THROWS_AS(scaling_sweep(Topology::kRing, {}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(scaling_sweep(Topology::kRing, {10, 1}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(scaling_sweep(Topology::kFull, {10}, 0.0), std::invalid_argument);
}
