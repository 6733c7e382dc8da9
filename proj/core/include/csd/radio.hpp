#pragma once

#include "csd/plan.hpp"
#include "csd/scenario.hpp"

namespace csd {

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);
double db_to_linear(double db);
double linear_to_db(double v);

/// One LTE-style resource block: 180 kHz.
inline constexpr double kRbBandwidthHz = 180e3;

/// Thermal noise power over `rb_bandwidth_hz`, in watts.
double noise_per_rb(double noise_psd_dbm_hz, double rb_bandwidth_hz);

/// Noise-plus-interference floors. Single-cell deployment: no adjacent-cell
/// interference, so every floor equals the thermal noise of one RB.
struct NoiseModel {
  double ni_per_rb = 0.0;
  double ni_enb = 0.0;

  double ni_rx(int /*pair*/) const { return ni_per_rb; }

  static NoiseModel from_config(const SimConfig& config);
};

/// Shared-region power restriction: the transmit power that makes the signal
/// received at the eNB equal ni_enb / tau_due, capped at p_max.
double restricted_shared_power(double gain_to_enb, double ni_enb, double tau_due, double p_max);

/// Linear per-RB transmit powers for one drop.
struct PowerProfile {
  double p_cue = 0.0;
  double p_due_dedicated = 0.0;
  double p_max = 0.0;
  std::vector<double> p_due_shared;  // per pair, restricted

  static PowerProfile from_scenario(const SimConfig& config, const Scenario& s,
                                    const NoiseModel& noise);
};

/// Uplink SINR seen by the eNB on a shared RB owned by `cue`, with every pair
/// in plan.transmitters[rb] interfering. Throws std::invalid_argument when
/// the plan does not assign `rb` to `cue`.
double sinr_enb(int cue, int rb, const AllocationPlan& plan, const Scenario& s,
                const PowerProfile& powers, const NoiseModel& noise);

/// SINR at pair `j`'s receiver on a shared RB it transmits on: co-reusing
/// pairs plus the owning CUE interfere. Throws when `j` is not transmitting
/// on `rb` or `rb` is not in the shared region.
double sinr_shared(int j, int rb, const AllocationPlan& plan, const Scenario& s,
                   const PowerProfile& powers, const NoiseModel& noise);

/// SINR at pair `j`'s receiver on a dedicated RB it transmits on; no CUE term.
double sinr_dedicated(int j, int rb, const AllocationPlan& plan, const Scenario& s,
                      const PowerProfile& powers, const NoiseModel& noise);

/// Shared-region SINR of pair `j` reusing `cue`'s RBs with no co-reusing
/// pairs: the quantity tested against gamma_min when classifying CUE
/// neighbours, and the metric used to rank pairs inside a clique.
double sinr_shared_solo(int cue, int j, const Scenario& s, const PowerProfile& powers,
                        const NoiseModel& noise);

/// Dedicated-region SINR of pair `j` on pair `owner`'s default RBs with only
/// the owner transmitting alongside. owner == j gives the interference-free
/// SINR of the pair's own quota.
double sinr_dedicated_vs_owner(int owner, int j, const Scenario& s, const PowerProfile& powers,
                               const NoiseModel& noise);

/// Transmission efficiency: bits deliverable in one RB at a given SINR.
/// Zero below gamma_min, then capped Shannon throughput over the RB's 168
/// resource elements with at most 6 bits per symbol.
inline constexpr double kResourceElementsPerRb = 168.0;
inline constexpr double kMaxBitsPerSymbol = 6.0;
double efficiency(double sinr_linear, double gamma_min_linear);

}  // namespace csd
