#include "csd/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace csd {

double dbm_to_watt(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }
double watt_to_dbm(double watt) { return 10.0 * std::log10(watt * 1000.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double v) { return 10.0 * std::log10(v); }

double noise_per_rb(double noise_psd_dbm_hz, double rb_bandwidth_hz) {
  return dbm_to_watt(noise_psd_dbm_hz + 10.0 * std::log10(rb_bandwidth_hz));
}

NoiseModel NoiseModel::from_config(const SimConfig& config) {
  NoiseModel n;
  n.ni_per_rb = noise_per_rb(config.noise_psd_dbm_hz, kRbBandwidthHz);
  n.ni_enb = n.ni_per_rb;  // single cell: no adjacent-cell interference
  return n;
}

double restricted_shared_power(double gain_to_enb, double ni_enb, double tau_due, double p_max) {
  return std::min(p_max, ni_enb / (tau_due * gain_to_enb));
}

PowerProfile PowerProfile::from_scenario(const SimConfig& config, const Scenario& s,
                                         const NoiseModel& noise) {
  PowerProfile p;
  p.p_cue = dbm_to_watt(config.pt_cue_dbm);
  p.p_due_dedicated = dbm_to_watt(config.pt_due_dedicated_dbm);
  p.p_max = dbm_to_watt(config.p_max_dbm);
  p.p_due_shared.resize(s.num_pairs());
  for (int j = 0; j < s.num_pairs(); ++j)
    p.p_due_shared[j] =
        restricted_shared_power(s.gain_due_enb[j], noise.ni_enb, config.tau_due, p.p_max);
  return p;
}

namespace {

[[noreturn]] void plan_error(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

double sinr_enb(int cue, int rb, const AllocationPlan& plan, const Scenario& s,
                const PowerProfile& powers, const NoiseModel& noise) {
  if (!plan.is_shared_rb(rb) || plan.shared_owner[rb] != cue)
    plan_error("sinr_enb: RB " + std::to_string(rb) + " not owned by CUE " + std::to_string(cue));
  double interference = 0.0;
  for (int i : plan.transmitters[rb]) interference += s.gain_due_enb[i] * powers.p_due_shared[i];
  return s.gain_cue_enb[cue] * powers.p_cue / (noise.ni_enb + interference);
}

double sinr_shared(int j, int rb, const AllocationPlan& plan, const Scenario& s,
                   const PowerProfile& powers, const NoiseModel& noise) {
  if (!plan.is_shared_rb(rb))
    plan_error("sinr_shared: RB " + std::to_string(rb) + " is not in the shared region");
  if (!plan.transmits(j, rb))
    plan_error("sinr_shared: pair " + std::to_string(j) + " does not transmit on RB " +
               std::to_string(rb));
  const int cue = plan.shared_owner[rb];
  double denom = noise.ni_rx(j) + s.gain_cue_rxj(cue, j) * powers.p_cue;
  for (int i : plan.transmitters[rb])
    if (i != j) denom += s.gain_txi_rxj(i, j) * powers.p_due_shared[i];
  return s.gain_txj_rxj[j] * powers.p_due_shared[j] / denom;
}

double sinr_dedicated(int j, int rb, const AllocationPlan& plan, const Scenario& s,
                      const PowerProfile& powers, const NoiseModel& noise) {
  if (plan.is_shared_rb(rb))
    plan_error("sinr_dedicated: RB " + std::to_string(rb) + " is not in the dedicated region");
  if (!plan.transmits(j, rb))
    plan_error("sinr_dedicated: pair " + std::to_string(j) + " does not transmit on RB " +
               std::to_string(rb));
  double denom = noise.ni_rx(j);
  for (int i : plan.transmitters[rb])
    if (i != j) denom += s.gain_txi_rxj(i, j) * powers.p_due_dedicated;
  return s.gain_txj_rxj[j] * powers.p_due_dedicated / denom;
}

double sinr_shared_solo(int cue, int j, const Scenario& s, const PowerProfile& powers,
                        const NoiseModel& noise) {
  const double denom = noise.ni_rx(j) + s.gain_cue_rxj(cue, j) * powers.p_cue;
  return s.gain_txj_rxj[j] * powers.p_due_shared[j] / denom;
}

double sinr_dedicated_vs_owner(int owner, int j, const Scenario& s, const PowerProfile& powers,
                               const NoiseModel& noise) {
  double denom = noise.ni_rx(j);
  if (owner != j) denom += s.gain_txi_rxj(owner, j) * powers.p_due_dedicated;
  return s.gain_txj_rxj[j] * powers.p_due_dedicated / denom;
}

double efficiency(double sinr_linear, double gamma_min_linear) {
  if (sinr_linear < gamma_min_linear) return 0.0;
  const double bits_per_symbol = std::min(std::log2(1.0 + sinr_linear), kMaxBitsPerSymbol);
  return kResourceElementsPerRb * bits_per_symbol;
}

}  // namespace csd
