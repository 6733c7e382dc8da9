#include "csd/allocator.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace csd {

std::vector<RbRange> allocate_cue_rbs(int n_s, int num_cues) {
  std::vector<RbRange> ranges(num_cues);
  const int base = n_s / num_cues;
  const int extra = n_s % num_cues;
  int cursor = 0;
  for (int z = 0; z < num_cues; ++z) {
    const int size = base + (z < extra ? 1 : 0);
    ranges[z] = {cursor, cursor + size};
    cursor += size;
  }
  return ranges;
}

std::vector<int> default_dedicated_quota(int n_d, const std::vector<int>& nmc_counts) {
  const int d = static_cast<int>(nmc_counts.size());
  std::vector<int> quota(d, 0);
  const long long total = std::accumulate(nmc_counts.begin(), nmc_counts.end(), 0LL);
  if (total == 0 || n_d == 0) return quota;

  // Integer largest-remainder rounding of n_d * w_i / total.
  std::vector<long long> remainder(d);
  int assigned = 0;
  for (int i = 0; i < d; ++i) {
    const long long num = static_cast<long long>(n_d) * nmc_counts[i];
    quota[i] = static_cast<int>(num / total);
    remainder[i] = num % total;
    assigned += quota[i];
  }
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return remainder[a] > remainder[b]; });
  for (int k = 0; k < n_d - assigned; ++k) quota[order[k]] += 1;
  return quota;
}

EfficiencyTables compute_efficiency_tables(const Scenario& s, const PowerProfile& powers,
                                           const NoiseModel& noise, double gamma_min_linear) {
  const int c = s.num_cues();
  const int d = s.num_pairs();
  EfficiencyTables eff;
  eff.shared_solo = GainMatrix(c, d);
  for (int z = 0; z < c; ++z)
    for (int j = 0; j < d; ++j)
      eff.shared_solo(z, j) = efficiency(sinr_shared_solo(z, j, s, powers, noise),
                                         gamma_min_linear);
  eff.dedicated_vs_owner = GainMatrix(d, d);
  for (int z = 0; z < d; ++z)
    for (int j = 0; j < d; ++j)
      eff.dedicated_vs_owner(z, j) = efficiency(sinr_dedicated_vs_owner(z, j, s, powers, noise),
                                                gamma_min_linear);
  return eff;
}

namespace {

// argmax by metric, ties to the lowest pair id; `clique` is ascending.
template <typename Metric>
int clique_winner(const Clique& clique, Metric&& metric) {
  int winner = clique.front();
  double best = metric(clique.front());
  for (std::size_t k = 1; k < clique.size(); ++k) {
    const double v = metric(clique[k]);
    if (v > best) {
      best = v;
      winner = clique[k];
    }
  }
  return winner;
}

// A pair transmits only when it wins every clique it belongs to; the result
// is an independent set because any two adjacent members share a maximal
// clique with a single winner.
template <typename Metric>
std::vector<int> every_clique_winners(const std::vector<int>& members,
                                      const std::vector<Clique>& cliques, int num_pairs,
                                      Metric&& metric) {
  std::vector<char> wins_all(num_pairs, 0);
  for (int j : members) wins_all[j] = 1;
  for (const auto& clique : cliques) {
    const int winner = clique_winner(clique, metric);
    for (int j : clique)
      if (j != winner) wins_all[j] = 0;
  }
  std::vector<int> out;
  for (int j : members)
    if (wins_all[j]) out.push_back(j);
  return out;  // ascending: members are ascending
}

}  // namespace

void allocate_shared(AllocationPlan& plan, const std::vector<RbRange>& cue_rbs,
                     const SubgraphSet& subgraphs, const CliqueSet& cliques,
                     const EfficiencyTables& eff) {
  const int num_pairs = eff.dedicated_vs_owner.rows();
  for (std::size_t z = 0; z < subgraphs.shared.size(); ++z) {
    const auto& members = subgraphs.shared[z];
    if (members.empty()) continue;
    const auto tx = every_clique_winners(members, cliques.shared[z], num_pairs,
                                         [&](int j) { return eff.shared_solo(z, j); });
    for (int rb = cue_rbs[z].begin; rb < cue_rbs[z].end; ++rb) plan.transmitters[rb] = tx;
  }
}

void allocate_dedicated(AllocationPlan& plan, const std::vector<int>& quota,
                        const SubgraphSet& subgraphs, const CliqueSet& cliques,
                        const EfficiencyTables& eff) {
  const int num_pairs = eff.dedicated_vs_owner.rows();
  int cursor = plan.n_shared;
  for (std::size_t z = 0; z < quota.size(); ++z) {
    const RbRange range{cursor, cursor + quota[z]};
    cursor = range.end;
    if (range.size() == 0) continue;

    // Owner plus the per-clique winners among the other members. The owner's
    // own clique is always the singleton {z}: every other member is one of
    // its non-neighbours.
    const auto& members = subgraphs.dedicated[z];
    std::vector<int> others;
    std::vector<Clique> contested;
    for (const auto& clique : cliques.dedicated[z]) {
      if (clique.size() == 1 && clique.front() == static_cast<int>(z)) continue;
      contested.push_back(clique);
    }
    for (int j : members)
      if (j != static_cast<int>(z)) others.push_back(j);

    auto tx = every_clique_winners(others, contested, num_pairs,
                                   [&](int j) { return eff.dedicated_vs_owner(z, j); });
    tx.push_back(static_cast<int>(z));
    std::sort(tx.begin(), tx.end());

    for (int rb = range.begin; rb < range.end; ++rb) {
      plan.dedicated_owner[rb - plan.n_shared] = static_cast<int>(z);
      plan.transmitters[rb] = tx;
    }
  }
  assert(cursor <= plan.n_shared + plan.n_dedicated);
}

namespace {

struct PerRegionBits {
  std::vector<double> shared;
  std::vector<double> dedicated;
};

// Gains are frequency-flat, so capacity is evaluated once per run of RBs with
// identical owner and transmitter set.
PerRegionBits per_pair_region_bits(const AllocationPlan& plan, const Scenario& s,
                                   const PowerProfile& powers, const NoiseModel& noise,
                                   double gamma_min_linear) {
  PerRegionBits bits;
  bits.shared.assign(s.num_pairs(), 0.0);
  bits.dedicated.assign(s.num_pairs(), 0.0);

  auto owner_of = [&plan](int r) {
    return plan.is_shared_rb(r) ? plan.shared_owner[r] : plan.dedicated_owner[r - plan.n_shared];
  };

  const int total = plan.total_rbs();
  int rb = 0;
  while (rb < total) {
    int end = rb + 1;
    while (end < total && plan.is_shared_rb(end) == plan.is_shared_rb(rb) &&
           owner_of(end) == owner_of(rb) && plan.transmitters[end] == plan.transmitters[rb])
      ++end;

    const auto& tx = plan.transmitters[rb];
    if (!tx.empty()) {
      const double rbs = static_cast<double>(end - rb);
      const bool shared = plan.is_shared_rb(rb);
      for (int j : tx) {
        const double sinr = shared ? sinr_shared(j, rb, plan, s, powers, noise)
                                   : sinr_dedicated(j, rb, plan, s, powers, noise);
        (shared ? bits.shared[j] : bits.dedicated[j]) += efficiency(sinr, gamma_min_linear) * rbs;
      }
    }
    rb = end;
  }
  return bits;
}

AllocationPlan make_plan_skeleton(const SimConfig& config, const PowerProfile& powers,
                                  const std::vector<RbRange>& cue_rbs) {
  AllocationPlan plan;
  plan.n_shared = config.n_s;
  plan.n_dedicated = config.n_d;
  plan.shared_owner.assign(config.n_s, -1);
  for (std::size_t z = 0; z < cue_rbs.size(); ++z)
    for (int rb = cue_rbs[z].begin; rb < cue_rbs[z].end; ++rb)
      plan.shared_owner[rb] = static_cast<int>(z);
  plan.dedicated_owner.assign(config.n_d, -1);
  plan.transmitters.assign(config.n_s + config.n_d, {});
  plan.shared_power = powers.p_due_shared;
  plan.dedicated_power = powers.p_due_dedicated;
  return plan;
}

}  // namespace

CapacityReport report_capacity(const AllocationPlan& plan, const Scenario& s,
                               const PowerProfile& powers, const NoiseModel& noise,
                               double gamma_min_linear) {
  const PerRegionBits bits = per_pair_region_bits(plan, s, powers, noise, gamma_min_linear);
  CapacityReport report;
  report.per_pair.assign(s.num_pairs(), 0.0);
  for (int j = 0; j < s.num_pairs(); ++j) {
    report.c_shared += bits.shared[j];
    report.c_dedicated += bits.dedicated[j];
    report.per_pair[j] = bits.shared[j] + bits.dedicated[j];
  }
  return report;
}

AllocationOutcome run_csd(const Scenario& s, const SimConfig& config, AllocationTrace* trace) {
  const auto noise = NoiseModel::from_config(config);
  const auto powers = PowerProfile::from_scenario(config, s, noise);
  const double gamma_min = db_to_linear(config.gamma_min_db);

  AllocationTrace local;
  AllocationTrace& t = trace ? *trace : local;
  t.relations = build_relations(s, config, powers, noise);
  t.subgraphs = build_subgraphs(t.relations);
  t.cliques = enumerate_cliques(t.subgraphs, t.relations.due_adjacency);
  t.cue_rbs = allocate_cue_rbs(config.n_s, config.num_cues);

  AllocationPlan plan = make_plan_skeleton(config, powers, t.cue_rbs);
  const auto eff = compute_efficiency_tables(s, powers, noise, gamma_min);

  allocate_shared(plan, t.cue_rbs, t.subgraphs, t.cliques, eff);

  const auto nmc = t.cliques.nmc_dedicated();
  assert(s.num_pairs() == 0 ||
         std::accumulate(nmc.begin(), nmc.end(), 0LL) > 0);  // own subgraph => >= 1 clique
  t.quota = default_dedicated_quota(config.n_d, nmc);
  allocate_dedicated(plan, t.quota, t.subgraphs, t.cliques, eff);

  CapacityReport report = report_capacity(plan, s, powers, noise, gamma_min);
  return {std::move(plan), std::move(report)};
}

AllocationOutcome run_max_sd(const Scenario& s, const SimConfig& config, AllocationTrace* trace) {
  const auto noise = NoiseModel::from_config(config);
  const auto powers = PowerProfile::from_scenario(config, s, noise);
  const double gamma_min = db_to_linear(config.gamma_min_db);
  const int d = s.num_pairs();

  AllocationTrace full;
  full.relations = build_relations(s, config, powers, noise);
  full.subgraphs = build_subgraphs(full.relations);
  full.cliques = enumerate_cliques(full.subgraphs, full.relations.due_adjacency);
  full.cue_rbs = allocate_cue_rbs(config.n_s, config.num_cues);
  const auto eff = compute_efficiency_tables(s, powers, noise, gamma_min);

  // Mode selection. Shared is valued over every CUE RB the pair may reuse,
  // dedicated over the pair's default quota, both before any competition.
  // Ties go to dedicated, which covers the forced case of a pair that
  // neighbours every CUE.
  const std::vector<int> quota_all =
      default_dedicated_quota(config.n_d, full.cliques.nmc_dedicated());
  std::vector<bool> shared_mode(d, false);
  for (int j = 0; j < d; ++j) {
    double shared_est = 0.0;
    for (std::size_t z = 0; z < full.subgraphs.shared.size(); ++z)
      if (!full.relations.cue_neighbor(static_cast<int>(z), j))
        shared_est += full.cue_rbs[z].size() * eff.shared_solo(static_cast<int>(z), j);
    const double dedicated_est = quota_all[j] * eff.dedicated_vs_owner(j, j);
    shared_mode[j] = shared_est > dedicated_est;
  }

  // Region structures restricted to each mode's pairs.
  SubgraphSet restricted;
  restricted.shared.resize(full.subgraphs.shared.size());
  for (std::size_t z = 0; z < full.subgraphs.shared.size(); ++z)
    for (int j : full.subgraphs.shared[z])
      if (shared_mode[j]) restricted.shared[z].push_back(j);
  restricted.dedicated.resize(d);
  for (int z = 0; z < d; ++z) {
    if (shared_mode[z]) continue;  // no default RBs for shared-mode pairs
    for (int j : full.subgraphs.dedicated[z])
      if (!shared_mode[j]) restricted.dedicated[z].push_back(j);
  }

  AllocationTrace local;
  AllocationTrace& t = trace ? *trace : local;
  t.relations = full.relations;
  t.subgraphs = std::move(restricted);
  t.cliques = enumerate_cliques(t.subgraphs, t.relations.due_adjacency);
  t.cue_rbs = full.cue_rbs;
  t.shared_mode = shared_mode;

  AllocationPlan plan = make_plan_skeleton(config, powers, t.cue_rbs);

  allocate_shared(plan, t.cue_rbs, t.subgraphs, t.cliques, eff);
  t.quota = default_dedicated_quota(config.n_d, t.cliques.nmc_dedicated());
  allocate_dedicated(plan, t.quota, t.subgraphs, t.cliques, eff);

  CapacityReport report = report_capacity(plan, s, powers, noise, gamma_min);
  return {std::move(plan), std::move(report)};
}

}  // namespace csd
