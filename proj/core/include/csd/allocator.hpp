#pragma once

#include <vector>

#include "csd/graph.hpp"
#include "csd/plan.hpp"
#include "csd/radio.hpp"
#include "csd/scenario.hpp"

namespace csd {

/// Contiguous RB range [begin, end) within the shared or dedicated region.
struct RbRange {
  int begin = 0;
  int end = 0;
  int size() const { return end - begin; }
  bool operator==(const RbRange&) const = default;
};

/// Step 1: contiguous equal split of the n_s shared RBs over the CUEs.
/// The first (n_s mod C) CUEs receive one extra RB.
std::vector<RbRange> allocate_cue_rbs(int n_s, int num_cues);

/// Default dedicated quota per pair, proportional to each pair's maximal-
/// clique count and rounded by largest remainder so the quotas sum to n_d
/// exactly (ties broken toward the lower pair id). All-zero weights yield
/// all-zero quotas.
std::vector<int> default_dedicated_quota(int n_d, const std::vector<int>& nmc_counts);

/// Winner-selection metrics, precomputed per drop.
///   shared_solo(z, j):        bits/RB of pair j on CUE z's RBs, no co-reusers.
///   dedicated_vs_owner(z, j): bits/RB of pair j on pair z's default RBs with
///                             only the owner transmitting; the diagonal is the
///                             interference-free value of a pair's own quota.
struct EfficiencyTables {
  GainMatrix shared_solo;         // C x D
  GainMatrix dedicated_vs_owner;  // D x D
};

EfficiencyTables compute_efficiency_tables(const Scenario& s, const PowerProfile& powers,
                                           const NoiseModel& noise, double gamma_min_linear);

/// Step 4: on each CUE's RBs, the member with the highest efficiency wins in
/// each maximal clique (ties -> lowest id); a pair transmits iff it wins every
/// clique containing it, which keeps the transmitter set independent.
void allocate_shared(AllocationPlan& plan, const std::vector<RbRange>& cue_rbs,
                     const SubgraphSet& subgraphs, const CliqueSet& cliques,
                     const EfficiencyTables& eff);

/// Steps 6-7: every owner transmits on its own quota; among the other members
/// of its subgraph the per-clique winners join it, same every-clique rule.
/// `quota` gives each pair's default RB count; ranges are assigned
/// contiguously in pair-id order starting at plan.n_shared.
void allocate_dedicated(AllocationPlan& plan, const std::vector<int>& quota,
                        const SubgraphSet& subgraphs, const CliqueSet& cliques,
                        const EfficiencyTables& eff);

/// Capacity of the final plan, evaluated with the actual transmitter sets
/// (full cross-pair interference, plus the owning CUE on shared RBs).
CapacityReport report_capacity(const AllocationPlan& plan, const Scenario& s,
                               const PowerProfile& powers, const NoiseModel& noise,
                               double gamma_min_linear);

/// Intermediate artifacts of a run, exposed for inspection and testing.
struct AllocationTrace {
  NeighborRelations relations;
  SubgraphSet subgraphs;
  CliqueSet cliques;
  std::vector<RbRange> cue_rbs;
  std::vector<int> quota;
  std::vector<bool> shared_mode;  // Max S/D only: mode chosen per pair
};

struct AllocationOutcome {
  AllocationPlan plan;
  CapacityReport report;
};

/// The combined shared/dedicated scheme: every pair may hold RBs in both
/// regions at once.
AllocationOutcome run_csd(const Scenario& s, const SimConfig& config,
                          AllocationTrace* trace = nullptr);

/// Baseline: each pair commits to the single region promising it more bits
/// (a dry CSD run supplies the per-pair estimates), then each region is
/// allocated exactly as in CSD but restricted to its committed pairs, with
/// dedicated quotas recomputed over the dedicated-mode pairs.
AllocationOutcome run_max_sd(const Scenario& s, const SimConfig& config,
                             AllocationTrace* trace = nullptr);

}  // namespace csd
