// Shared helpers for the unit and acceptance suites: an independent
// brute-force clique oracle, a plan-invariant checker that re-derives the
// conflict structure from scratch, and small fixture builders.
#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "csd/allocator.hpp"
#include "csd/campaign.hpp"
#include "csd/fixture.hpp"
#include "csd/graph.hpp"
#include "csd/radio.hpp"
#include "csd/rng.hpp"
#include "csd/scenario.hpp"

#ifndef CSD_TEST_DATA_DIR
#define CSD_TEST_DATA_DIR "data/fixtures"
#endif
#ifndef CSD_TEST_CONFIG_DIR
#define CSD_TEST_CONFIG_DIR "configs"
#endif

namespace csd_test {

inline std::string fixture_path(const std::string& name) {
  return std::string(CSD_TEST_DATA_DIR) + "/" + name + ".json";
}

inline std::string config_path(const std::string& name) {
  return std::string(CSD_TEST_CONFIG_DIR) + "/" + name;
}

// ---------------------------------------------------------------------------
// Brute-force maximal-clique oracle: enumerate every vertex subset, keep the
// complete ones, drop those contained in a larger complete one. Usable for
// n <= ~14.
inline std::vector<csd::Clique> brute_force_cliques(const std::vector<int>& vertices,
                                                    const csd::BoolMatrix& adjacency) {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::uint32_t> complete;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = a + 1; b < n && ok; ++b) {
        if (!(mask >> b & 1)) continue;
        if (!adjacency(vertices[a], vertices[b])) ok = false;
      }
    }
    if (ok) complete.push_back(mask);
  }
  std::vector<csd::Clique> cliques;
  for (std::uint32_t mask : complete) {
    bool maximal = true;
    for (std::uint32_t other : complete)
      if (other != mask && (other & mask) == mask) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    csd::Clique clique;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) clique.push_back(vertices[a]);
    cliques.push_back(clique);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

inline csd::BoolMatrix random_graph(int n, double edge_prob, std::uint64_t seed) {
  csd::BoolMatrix adj(n, n);
  csd::SplitMix64 rng(seed);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.next_unit() < edge_prob) {
        adj.set(a, b, true);
        adj.set(b, a, true);
      }
  return adj;
}

// ---------------------------------------------------------------------------
// Independent plan checker. Every structure is re-derived from the scenario,
// not taken from the allocator's trace.
inline std::vector<std::string> check_plan_invariants(const csd::AllocationPlan& plan,
                                                      const csd::Scenario& s,
                                                      const csd::SimConfig& config) {
  using namespace csd;
  std::vector<std::string> problems;
  auto fail = [&problems](const std::string& what) { problems.push_back(what); };

  const NoiseModel noise = NoiseModel::from_config(config);
  const PowerProfile powers = PowerProfile::from_scenario(config, s, noise);
  const NeighborRelations relations = build_relations(s, config, powers, noise);

  if (plan.n_shared != config.n_s || plan.n_dedicated != config.n_d)
    fail("plan region sizes disagree with config");

  // Orthogonality (which also enforces clique consistency: two members of a
  // maximal clique are adjacent by definition).
  for (int rb = 0; rb < plan.total_rbs(); ++rb) {
    const auto& tx = plan.transmitters[rb];
    if (!std::is_sorted(tx.begin(), tx.end()))
      fail("transmitters not sorted on RB " + std::to_string(rb));
    for (std::size_t a = 0; a < tx.size(); ++a)
      for (std::size_t b = a + 1; b < tx.size(); ++b)
        if (relations.due_adjacency(tx[a], tx[b]))
          fail("adjacent pairs " + std::to_string(tx[a]) + "," + std::to_string(tx[b]) +
               " share RB " + std::to_string(rb));
  }

  // Shared region: one owning CUE per RB, transmitters not its neighbours,
  // powers equal to the restriction.
  for (int rb = 0; rb < plan.n_shared; ++rb) {
    const int owner = plan.shared_owner[rb];
    if (owner < 0 || owner >= s.num_cues()) {
      fail("shared RB " + std::to_string(rb) + " has no owner");
      continue;
    }
    for (int j : plan.transmitters[rb]) {
      if (relations.cue_neighbor(owner, j))
        fail("pair " + std::to_string(j) + " reuses its neighbour CUE " + std::to_string(owner));
      const double expected = restricted_shared_power(s.gain_due_enb[j], noise.ni_enb,
                                                      config.tau_due, powers.p_max);
      if (plan.tx_power(j, rb) != expected)
        fail("shared power of pair " + std::to_string(j) + " deviates from the restriction");
    }
  }

  // Dedicated region: contiguous per-owner ranges in pair-id order, owner
  // transmitting, full dedicated power, total within n_d.
  int quota_total = 0;
  int prev_owner = -1;
  for (int rb = plan.n_shared; rb < plan.total_rbs(); ++rb) {
    const int owner = plan.dedicated_owner[rb - plan.n_shared];
    if (owner < 0) {
      if (!plan.transmitters[rb].empty()) fail("unowned dedicated RB has transmitters");
      continue;
    }
    ++quota_total;
    if (owner < prev_owner) fail("dedicated owner ranges out of order");
    prev_owner = owner;
    if (!plan.transmits(owner, rb))
      fail("owner " + std::to_string(owner) + " silent on its default RB " + std::to_string(rb));
    for (int j : plan.transmitters[rb])
      if (plan.tx_power(j, rb) != powers.p_due_dedicated)
        fail("dedicated power of pair " + std::to_string(j) + " is not p_due_dedicated");
  }
  if (quota_total > config.n_d) fail("dedicated assignments exceed n_d");

  return problems;
}

// ---------------------------------------------------------------------------
// Minimal hand-built scenario: gains are authored directly, positions nominal.
struct TinyScenarioBuilder {
  csd::SimConfig config;
  csd::Scenario scenario;

  TinyScenarioBuilder(int num_cues, int num_pairs) {
    config.num_cues = num_cues;
    config.num_pairs = num_pairs;
    config.rb_total = 4;
    config.overhead_fraction = 0.0;
    config.n_s = 2;
    config.n_d = 2;
    config.drops = 1;
    scenario.enb_pos = {250.0, 250.0};
    scenario.cue_pos.assign(num_cues, {100.0, 100.0});
    scenario.pair_pos.assign(num_pairs, {{200.0, 200.0}, {210.0, 200.0}});
    scenario.gain_cue_enb.assign(num_cues, 1e-10);
    scenario.gain_due_enb.assign(num_pairs, 1e-12);
    scenario.gain_txj_rxj.assign(num_pairs, 1e-11);
    scenario.gain_txi_rxj = csd::GainMatrix(num_pairs, num_pairs, 1e-17);
    for (int j = 0; j < num_pairs; ++j) scenario.gain_txi_rxj(j, j) = 1e-11;
    scenario.gain_cue_rxj = csd::GainMatrix(num_cues, num_pairs, 1e-15);
  }
};

}  // namespace csd_test
