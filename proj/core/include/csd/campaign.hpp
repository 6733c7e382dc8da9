#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csd/scenario.hpp"

namespace csd {

enum class Scheme { csd, max_sd };

std::string to_string(Scheme scheme);
std::optional<Scheme> scheme_from_string(const std::string& name);

/// Monte-Carlo sweep: every combination of scheme, pair count, transmit power
/// and neighbourhood threshold is one grid cell, evaluated over `drops`
/// drops. pt overrides both pt_cue_dbm and pt_due_dedicated_dbm.
struct CampaignSpec {
  SimConfig base;
  std::vector<int> pair_counts;
  std::vector<double> pt_dbm_values;
  std::vector<double> tau_n_values_db;
  std::vector<Scheme> schemes;
  int drops = 200;

  bool operator==(const CampaignSpec&) const = default;
};

std::vector<std::string> validate(const CampaignSpec& spec);

struct CellKey {
  Scheme scheme = Scheme::csd;
  int num_pairs = 0;
  double pt_dbm = 0.0;
  double tau_n_db = 0.0;
  bool operator==(const CellKey&) const = default;
};

struct CellStats {
  int drops = 0;
  double mean_csum = 0.0;
  double stderr_csum = 0.0;
  double mean_cshared = 0.0;
  double mean_cdedicated = 0.0;
};

struct CampaignResult {
  std::vector<CellKey> keys;
  std::vector<CellStats> stats;  // aligned with keys

  const CellStats* find(Scheme scheme, int num_pairs, double pt_dbm, double tau_n_db) const;
};

/// Base config specialised to one grid cell. The rng_seed is left at the
/// base seed: scheme, transmit power and threshold never enter drop
/// generation, and pair placements are drawn as a stream, so every cell of
/// the grid consumes the same drops (common random numbers) with smaller
/// pair counts seeing prefixes of larger ones. Paired comparisons across
/// schemes, powers, thresholds and densities all profit, and adding grid
/// cells never perturbs existing ones.
SimConfig cell_config(const SimConfig& base, int num_pairs, double pt_dbm, double tau_n_db);

/// Worker threads used for drop evaluation: hardware concurrency, capped by
/// the CSD_SIM_THREADS environment variable when set.
int worker_thread_count();

/// Runs every grid cell over `spec.drops` paired drops. Means are reduced in
/// drop-index order, so the result is a pure function of the spec regardless
/// of thread scheduling.
CampaignResult run_campaign(const CampaignSpec& spec);

/// Capacity-vs-tau curve and its maximiser for each (pair count, pt) pair,
/// using the csd scheme. Ties resolve to the lower threshold.
struct TauSweepCurve {
  int num_pairs = 0;
  double pt_dbm = 0.0;
  std::vector<double> tau_n_db;
  std::vector<double> mean_csum;
  double argmax_tau_n_db = 0.0;
};

std::vector<TauSweepCurve> sweep_tau(const CampaignSpec& spec);

}  // namespace csd
