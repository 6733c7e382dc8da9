#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace csd {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

double distance_m(const Point& a, const Point& b);

/// Transmitter/receiver endpoints of one D2D pair.
struct PairPlacement {
  Point tx;
  Point rx;
  bool operator==(const PairPlacement&) const = default;
};

/// Dense row-major matrix of linear channel gains.
class GainMatrix {
 public:
  GainMatrix() = default;
  GainMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  double operator()(int r, int c) const { return data_[idx(r, c)]; }
  double& operator()(int r, int c) { return data_[idx(r, c)]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool operator==(const GainMatrix&) const = default;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

enum class LinkKind { cellular, d2d };

/// Full parameter set for one simulation. Powers and thresholds are kept in
/// the units used at the configuration boundary (dBm / dB); conversion to
/// linear watts happens exactly once, in radio::PowerProfile / NoiseModel.
struct SimConfig {
  double area_side_m = 500.0;
  int num_cues = 20;
  int num_pairs = 25;
  double max_pair_dist_m = 200.0;
  double carrier_ghz = 2.0;
  double bandwidth_mhz = 20.0;
  int rb_total = 2000;             // RBs per 10 ms frame, data + signalling
  double overhead_fraction = 0.25; // share of rb_total spent on signalling
  int n_s = 750;                   // shared-region RBs
  int n_d = 750;                   // dedicated-region RBs
  double pt_cue_dbm = 10.0;        // per-RB CUE transmit power
  double pt_due_dedicated_dbm = 10.0;
  double p_max_dbm = 23.0;         // cap on the restricted shared-region power
  double tau_due = 10.0;           // linear factor protecting the eNB
  double tau_n_db = 0.0;           // pair-neighbourhood threshold
  double gamma_min_db = -9.478;    // minimum usable SINR
  double noise_psd_dbm_hz = -174.0;
  int drops = 200;
  std::uint64_t rng_seed = 1;

  bool operator==(const SimConfig&) const = default;
};

/// Returns one "field: problem" entry per violated constraint; empty => valid.
/// num_pairs = 0 is allowed (degenerate but well-defined drops).
std::vector<std::string> validate(const SimConfig& config);

/// One Monte-Carlo drop: geometry plus the derived linear gain tables.
/// Gains are frequency-flat: one value per link serves every RB.
struct Scenario {
  Point enb_pos;
  std::vector<Point> cue_pos;
  std::vector<PairPlacement> pair_pos;

  std::vector<double> gain_cue_enb;  // C: CUE -> eNB
  std::vector<double> gain_due_enb;  // D: pair transmitter -> eNB
  std::vector<double> gain_txj_rxj;  // D: direct link of each pair
  GainMatrix gain_txi_rxj;           // D x D: row = interfering tx, col = victim rx
  GainMatrix gain_cue_rxj;           // C x D: CUE -> pair receiver

  int num_cues() const { return static_cast<int>(cue_pos.size()); }
  int num_pairs() const { return static_cast<int>(pair_pos.size()); }
  bool operator==(const Scenario&) const = default;
};

/// Distance-based path loss. Distances below kMinPathLossDistanceM are
/// evaluated at kMinPathLossDistanceM.
///   cellular: 128.1 + 37.6 log10(d_km)
///   d2d:      148.0 + 40.0 log10(d_km)
inline constexpr double kMinPathLossDistanceM = 3.0;
double path_loss_db(LinkKind kind, double distance_m);

/// Linear gain from a path loss: g = 10^(-PL/10).
double gain_from_path_loss_db(double pl_db);

/// Fills every gain field of `s` from its positions.
void compute_gains(Scenario& s);

/// Deterministic drop generation: identical (config.rng_seed, drop_index)
/// always produce a byte-identical Scenario. CUE and pair-transmitter
/// positions are uniform in the square; each receiver is uniform in the disk
/// of radius max_pair_dist_m around its transmitter, rejection-sampled to
/// stay inside the area.
Scenario generate_drop(const SimConfig& config, int drop_index);

}  // namespace csd
