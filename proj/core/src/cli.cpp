#include "csd/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>

#include "csd/allocator.hpp"
#include "csd/campaign.hpp"
#include "csd/config.hpp"
#include "csd/fixture.hpp"
#include "csd/report.hpp"
#include "csd/version.hpp"

namespace csd::cli {

namespace {

namespace fs = std::filesystem;

ResolvedConfig load_any_config(const std::string& path) {
  if (looks_like_manifest(path)) return load_manifest(path);
  return load_config_file(path);
}

/// Pair counts plotted in the tau sweep: the sweep is most informative at the
/// densities 25/50/75 when the campaign covers them, else at the largest
/// configured density.
std::vector<int> sweep_pair_counts(const std::vector<int>& pair_counts) {
  std::vector<int> out;
  for (int n : pair_counts)
    if (n == 25 || n == 50 || n == 75) out.push_back(n);
  if (out.empty()) out.push_back(*std::max_element(pair_counts.begin(), pair_counts.end()));
  return out;
}

std::string format_dbm(double watt) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", watt_to_dbm(watt));
  return buf;
}

void print_id_set(std::ostream& out, const std::vector<int>& ids) {
  out << '{';
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (k) out << ',';
    out << ids[k];
  }
  out << '}';
}

void print_bool_matrix(std::ostream& out, const BoolMatrix& m, const char* row_label) {
  for (int r = 0; r < m.rows(); ++r) {
    out << "  " << row_label << ' ' << r << ": ";
    for (int c = 0; c < m.cols(); ++c) out << (m(r, c) ? '1' : '0');
    out << '\n';
  }
}

void print_plan_blocks(std::ostream& out, const AllocationPlan& plan) {
  auto owner_of = [&plan](int r) {
    return plan.is_shared_rb(r) ? plan.shared_owner[r] : plan.dedicated_owner[r - plan.n_shared];
  };
  int rb = 0;
  while (rb < plan.total_rbs()) {
    int end = rb + 1;
    while (end < plan.total_rbs() && plan.is_shared_rb(end) == plan.is_shared_rb(rb) &&
           owner_of(end) == owner_of(rb) && plan.transmitters[end] == plan.transmitters[rb])
      ++end;

    const bool shared = plan.is_shared_rb(rb);
    out << "  RB " << rb << ".." << end - 1 << "  ";
    if (shared)
      out << "CUE " << owner_of(rb);
    else if (owner_of(rb) >= 0)
      out << "pair " << owner_of(rb) << " (default)";
    else
      out << "unassigned";
    out << "  tx=";
    print_id_set(out, plan.transmitters[rb]);
    if (!plan.transmitters[rb].empty()) {
      out << "  p_dbm={";
      for (std::size_t k = 0; k < plan.transmitters[rb].size(); ++k) {
        if (k) out << ',';
        out << format_dbm(plan.tx_power(plan.transmitters[rb][k], rb));
      }
      out << '}';
    }
    out << '\n';
    rb = end;
  }
}

}  // namespace

int cmd_campaign(const CampaignOptions& options, std::ostream& diag) {
  ResolvedConfig resolved;
  try {
    resolved = load_any_config(options.config_path);
    if (options.drops) {
      if (*options.drops < 1) throw ConfigError("drops", 0, "--drops must be >= 1");
      resolved.campaign.drops = *options.drops;
    }
    if (options.seed) {
      resolved.scenario.rng_seed = *options.seed;
      resolved.campaign.base.rng_seed = *options.seed;
    }
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  const auto start = std::chrono::steady_clock::now();

  // fig3: capacity vs pair count at the configured tau_n.
  CampaignSpec fig3 = resolved.campaign;
  fig3.tau_n_values_db = {resolved.scenario.tau_n_db};
  const CampaignResult fig3_result = run_campaign(fig3);

  // fig4: capacity vs tau_n, csd scheme.
  CampaignSpec fig4 = resolved.campaign;
  fig4.schemes = {Scheme::csd};
  fig4.pair_counts = sweep_pair_counts(resolved.campaign.pair_counts);
  const CampaignResult fig4_result = run_campaign(fig4);

  const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  try {
    fs::create_directories(options.out_dir);
    const std::string fig3_path = options.out_dir + "/fig3.csv";
    const std::string fig4_path = options.out_dir + "/fig4.csv";
    const std::string manifest_path = options.out_dir + "/manifest.json";
    write_file(fig3_path, render_result_csv(fig3_result));
    write_file(fig4_path, render_result_csv(fig4_result));

    RunManifest manifest;
    manifest.tool = kToolName;
    manifest.version = kVersion;
    manifest.config_path = options.config_path;
    manifest.wall_clock_ms = static_cast<std::uint64_t>(wall_ms);
    manifest.outputs = {fig3_path, fig4_path};
    manifest.resolved = resolved;
    write_manifest(manifest_path, manifest);
  } catch (const std::exception& e) {
    diag << "io error: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

int cmd_inspect(const InspectOptions& options, std::ostream& out, std::ostream& diag) {
  SimConfig config;
  Scenario scenario;
  try {
    if (!options.fixture.empty()) {
      const GoldenFixture fixture = load_fixture(resolve_fixture_path(options.fixture));
      config = fixture.config;
      scenario = fixture.scenario;
      out << "fixture: " << fixture.name << '\n';
    } else {
      const ResolvedConfig resolved = load_any_config(options.config_path);
      config = resolved.scenario;
      if (options.drop_index < 0) throw ConfigError("drop", 0, "--drop must be >= 0");
      scenario = generate_drop(config, options.drop_index);
      out << "drop " << options.drop_index << " of config " << options.config_path << '\n';
    }
  } catch (const ConfigError& e) {
    diag << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    diag << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  AllocationTrace trace;
  const AllocationOutcome outcome = run_csd(scenario, config, &trace);

  out << "cues=" << scenario.num_cues() << " pairs=" << scenario.num_pairs()
      << " n_s=" << config.n_s << " n_d=" << config.n_d << " tau_n_db=" << config.tau_n_db
      << " pt_cue_dbm=" << config.pt_cue_dbm << '\n';

  if (scenario.num_pairs() > 0) {
    out << "cue_neighbor matrix (row = CUE, col = pair, 1 = may not reuse):\n";
    print_bool_matrix(out, trace.relations.cue_neighbor, "CUE");
    out << "due_adjacency matrix (1 = mutual neighbours):\n";
    print_bool_matrix(out, trace.relations.due_adjacency, "pair");

    out << "shared subgraphs and maximal cliques:\n";
    for (std::size_t z = 0; z < trace.subgraphs.shared.size(); ++z) {
      out << "  CUE " << z << ": members=";
      print_id_set(out, trace.subgraphs.shared[z]);
      out << " cliques=";
      for (const auto& clique : trace.cliques.shared[z]) print_id_set(out, clique);
      out << '\n';
    }
    out << "dedicated subgraphs and maximal cliques:\n";
    for (std::size_t z = 0; z < trace.subgraphs.dedicated.size(); ++z) {
      out << "  pair " << z << ": members=";
      print_id_set(out, trace.subgraphs.dedicated[z]);
      out << " cliques=";
      for (const auto& clique : trace.cliques.dedicated[z]) print_id_set(out, clique);
      out << " quota=" << trace.quota[z] << '\n';
    }
  }

  out << "allocation plan:\n";
  print_plan_blocks(out, outcome.plan);

  out << "per-pair capacity (bits/frame):\n";
  for (int j = 0; j < scenario.num_pairs(); ++j)
    out << "  pair " << j << ": " << std::llround(outcome.report.per_pair[j]) << '\n';
  out << "c_shared=" << std::llround(outcome.report.c_shared)
      << " c_dedicated=" << std::llround(outcome.report.c_dedicated)
      << " c_sum=" << std::llround(outcome.report.c_sum()) << '\n';
  return kExitOk;
}

}  // namespace csd::cli
