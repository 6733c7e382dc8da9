#include "csd/scenario.hpp"

#include <cmath>

#include "csd/rng.hpp"

namespace csd {

double distance_m(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<std::string> validate(const SimConfig& c) {
  std::vector<std::string> problems;
  auto bad = [&problems](const std::string& field, const std::string& why) {
    problems.push_back(field + ": " + why);
  };

  if (!(c.area_side_m > 0)) bad("area_side_m", "must be > 0");
  if (c.num_cues <= 0) bad("num_cues", "must be > 0");
  if (c.num_pairs < 0) bad("num_pairs", "must be >= 0");
  if (!(c.max_pair_dist_m > 0)) bad("max_pair_dist_m", "must be > 0");
  if (c.max_pair_dist_m > c.area_side_m) bad("max_pair_dist_m", "must be <= area_side_m");
  if (!(c.carrier_ghz > 0)) bad("carrier_ghz", "must be > 0");
  if (!(c.bandwidth_mhz > 0)) bad("bandwidth_mhz", "must be > 0");
  if (c.rb_total <= 0) bad("rb_total", "must be > 0");
  if (!(c.overhead_fraction >= 0 && c.overhead_fraction < 1))
    bad("overhead_fraction", "must be in [0, 1)");
  if (c.n_s <= 0) bad("n_s", "must be > 0");
  if (c.n_d <= 0) bad("n_d", "must be > 0");
  const long data_rbs = std::lround(c.rb_total * (1.0 - c.overhead_fraction));
  if (c.n_s + c.n_d != data_rbs)
    bad("n_s", "n_s + n_d must equal rb_total * (1 - overhead_fraction) = " +
                   std::to_string(data_rbs));
  if (!(c.tau_due > 0)) bad("tau_due", "must be > 0");
  if (c.drops <= 0) bad("drops", "must be > 0");
  return problems;
}

double path_loss_db(LinkKind kind, double distance) {
  const double d_km = std::max(distance, kMinPathLossDistanceM) / 1000.0;
  switch (kind) {
    case LinkKind::cellular:
      return 128.1 + 37.6 * std::log10(d_km);
    case LinkKind::d2d:
      return 148.0 + 40.0 * std::log10(d_km);
  }
  return 0.0;  // unreachable
}

double gain_from_path_loss_db(double pl_db) { return std::pow(10.0, -pl_db / 10.0); }

namespace {

double link_gain(LinkKind kind, const Point& a, const Point& b) {
  return gain_from_path_loss_db(path_loss_db(kind, distance_m(a, b)));
}

}  // namespace

void compute_gains(Scenario& s) {
  const int c = s.num_cues();
  const int d = s.num_pairs();

  s.gain_cue_enb.resize(c);
  for (int z = 0; z < c; ++z)
    s.gain_cue_enb[z] = link_gain(LinkKind::cellular, s.cue_pos[z], s.enb_pos);

  s.gain_due_enb.resize(d);
  s.gain_txj_rxj.resize(d);
  for (int j = 0; j < d; ++j) {
    s.gain_due_enb[j] = link_gain(LinkKind::cellular, s.pair_pos[j].tx, s.enb_pos);
    s.gain_txj_rxj[j] = link_gain(LinkKind::d2d, s.pair_pos[j].tx, s.pair_pos[j].rx);
  }

  s.gain_txi_rxj = GainMatrix(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      s.gain_txi_rxj(i, j) =
          i == j ? s.gain_txj_rxj[j]  // diagonal unused by the SINR sums
                 : link_gain(LinkKind::d2d, s.pair_pos[i].tx, s.pair_pos[j].rx);

  s.gain_cue_rxj = GainMatrix(c, d);
  for (int z = 0; z < c; ++z)
    for (int j = 0; j < d; ++j)
      s.gain_cue_rxj(z, j) = link_gain(LinkKind::d2d, s.cue_pos[z], s.pair_pos[j].rx);
}

Scenario generate_drop(const SimConfig& config, int drop_index) {
  SplitMix64 rng(hash_mix(config.rng_seed, static_cast<std::uint64_t>(drop_index)));

  Scenario s;
  const double side = config.area_side_m;
  s.enb_pos = {side / 2.0, side / 2.0};

  s.cue_pos.resize(config.num_cues);
  for (auto& p : s.cue_pos) {
    p.x = rng.next_uniform(side);
    p.y = rng.next_uniform(side);
  }

  s.pair_pos.resize(config.num_pairs);
  for (auto& pp : s.pair_pos) {
    pp.tx.x = rng.next_uniform(side);
    pp.tx.y = rng.next_uniform(side);
    // Receiver uniform in the disk around the transmitter; resample until it
    // lands inside the area. Terminates: the transmitter is inside, so a
    // positive fraction of the disk always is too.
    for (;;) {
      const double r = config.max_pair_dist_m * std::sqrt(rng.next_unit());
      const double phi = 2.0 * M_PI * rng.next_unit();
      pp.rx.x = pp.tx.x + r * std::cos(phi);
      pp.rx.y = pp.tx.y + r * std::sin(phi);
      if (pp.rx.x >= 0 && pp.rx.x <= side && pp.rx.y >= 0 && pp.rx.y <= side) break;
    }
  }

  compute_gains(s);
  return s;
}

}  // namespace csd
