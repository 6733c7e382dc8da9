#include "csd/campaign.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "csd/allocator.hpp"
#include "csd/rng.hpp"

namespace csd {

std::string to_string(Scheme scheme) { return scheme == Scheme::csd ? "csd" : "maxsd"; }

std::optional<Scheme> scheme_from_string(const std::string& name) {
  if (name == "csd") return Scheme::csd;
  if (name == "maxsd") return Scheme::max_sd;
  return std::nullopt;
}

std::vector<std::string> validate(const CampaignSpec& spec) {
  std::vector<std::string> problems;
  for (auto& p : validate(spec.base)) problems.push_back("scenario." + p);
  if (spec.pair_counts.empty()) problems.push_back("pair_counts: must not be empty");
  for (int n : spec.pair_counts)
    if (n < 0) problems.push_back("pair_counts: entries must be >= 0");
  if (spec.pt_dbm_values.empty()) problems.push_back("pt_dbm_values: must not be empty");
  if (spec.tau_n_values_db.empty()) problems.push_back("tau_n_values_db: must not be empty");
  if (spec.schemes.empty()) problems.push_back("schemes: must not be empty");
  if (spec.drops < 1) problems.push_back("drops: must be >= 1");
  return problems;
}

const CellStats* CampaignResult::find(Scheme scheme, int num_pairs, double pt_dbm,
                                      double tau_n_db) const {
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const CellKey& key = keys[k];
    if (key.scheme == scheme && key.num_pairs == num_pairs && key.pt_dbm == pt_dbm &&
        key.tau_n_db == tau_n_db)
      return &stats[k];
  }
  return nullptr;
}

SimConfig cell_config(const SimConfig& base, int num_pairs, double pt_dbm, double tau_n_db) {
  SimConfig cfg = base;
  cfg.num_pairs = num_pairs;
  cfg.pt_cue_dbm = pt_dbm;
  cfg.pt_due_dedicated_dbm = pt_dbm;
  cfg.tau_n_db = tau_n_db;
  return cfg;
}

int worker_thread_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("CSD_SIM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

namespace {

struct DropOutcome {
  double c_sum = 0.0;
  double c_shared = 0.0;
  double c_dedicated = 0.0;
};

CellStats reduce_cell(const std::vector<DropOutcome>& drops) {
  CellStats stats;
  stats.drops = static_cast<int>(drops.size());
  for (const auto& d : drops) {
    stats.mean_csum += d.c_sum;
    stats.mean_cshared += d.c_shared;
    stats.mean_cdedicated += d.c_dedicated;
  }
  const double n = static_cast<double>(stats.drops);
  stats.mean_csum /= n;
  stats.mean_cshared /= n;
  stats.mean_cdedicated /= n;
  if (stats.drops >= 2) {
    double ss = 0.0;
    for (const auto& d : drops) {
      const double dev = d.c_sum - stats.mean_csum;
      ss += dev * dev;
    }
    stats.stderr_csum = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return stats;
}

}  // namespace

CampaignResult run_campaign(const CampaignSpec& spec) {
  if (const auto problems = validate(spec); !problems.empty())
    throw std::invalid_argument("invalid campaign spec: " + problems.front());

  CampaignResult result;
  for (Scheme scheme : spec.schemes)
    for (int num_pairs : spec.pair_counts)
      for (double pt : spec.pt_dbm_values)
        for (double tau : spec.tau_n_values_db)
          result.keys.push_back({scheme, num_pairs, pt, tau});

  const int cells = static_cast<int>(result.keys.size());
  std::vector<std::vector<DropOutcome>> outcomes(cells);
  for (auto& v : outcomes) v.resize(spec.drops);

  // Every (cell, drop) pair is an independent task; results land in
  // preassigned slots, so the reduction order is fixed no matter how the
  // tasks are scheduled.
  const long long total_tasks = static_cast<long long>(cells) * spec.drops;
  std::atomic<long long> next_task{0};
  auto worker = [&]() {
    for (;;) {
      const long long task = next_task.fetch_add(1);
      if (task >= total_tasks) return;
      const int cell = static_cast<int>(task / spec.drops);
      const int drop = static_cast<int>(task % spec.drops);
      const CellKey& key = result.keys[cell];
      const SimConfig cfg = cell_config(spec.base, key.num_pairs, key.pt_dbm, key.tau_n_db);
      const Scenario scenario = generate_drop(cfg, drop);
      const AllocationOutcome out =
          key.scheme == Scheme::csd ? run_csd(scenario, cfg) : run_max_sd(scenario, cfg);
      outcomes[cell][drop] = {out.report.c_sum(), out.report.c_shared, out.report.c_dedicated};
    }
  };

  const int threads = std::min<long long>(worker_thread_count(), total_tasks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.stats.reserve(cells);
  for (int c = 0; c < cells; ++c) result.stats.push_back(reduce_cell(outcomes[c]));
  return result;
}

std::vector<TauSweepCurve> sweep_tau(const CampaignSpec& spec) {
  CampaignSpec csd_spec = spec;
  csd_spec.schemes = {Scheme::csd};
  const CampaignResult result = run_campaign(csd_spec);

  std::vector<TauSweepCurve> curves;
  for (int num_pairs : spec.pair_counts) {
    for (double pt : spec.pt_dbm_values) {
      TauSweepCurve curve;
      curve.num_pairs = num_pairs;
      curve.pt_dbm = pt;
      for (double tau : spec.tau_n_values_db) {
        const CellStats* cell = result.find(Scheme::csd, num_pairs, pt, tau);
        curve.tau_n_db.push_back(tau);
        curve.mean_csum.push_back(cell->mean_csum);
      }
      std::size_t best = 0;
      for (std::size_t k = 1; k < curve.mean_csum.size(); ++k) {
        const bool better = curve.mean_csum[k] > curve.mean_csum[best] ||
                            (curve.mean_csum[k] == curve.mean_csum[best] &&
                             curve.tau_n_db[k] < curve.tau_n_db[best]);
        if (better) best = k;  // ties resolve to the lower threshold
      }
      curve.argmax_tau_n_db = curve.tau_n_db[best];
      curves.push_back(std::move(curve));
    }
  }
  return curves;
}

}  // namespace csd
