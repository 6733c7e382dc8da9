// Command-line front end: `csd-sim campaign` sweeps the Monte-Carlo grid and
// writes CSV series, `csd-sim inspect` prints one drop's allocation in full.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "csd/cli.hpp"
#include "csd/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Single-cell D2D resource-allocation simulator"};
  app.set_version_flag("--version", std::string(csd::kToolName) + " " + csd::kVersion);
  app.require_subcommand(1);

  csd::cli::CampaignOptions campaign_opts;
  int campaign_drops = 0;
  std::uint64_t campaign_seed = 0;
  auto* campaign = app.add_subcommand("campaign", "Run the Monte-Carlo campaign grid");
  campaign->add_option("config", campaign_opts.config_path, "Config file or manifest.json")
      ->required();
  campaign->add_option("--out", campaign_opts.out_dir, "Output directory")->required();
  auto* drops_opt = campaign->add_option("--drops", campaign_drops, "Override drops per cell");
  auto* seed_opt = campaign->add_option("--seed", campaign_seed, "Override base RNG seed");

  csd::cli::InspectOptions inspect_opts;
  auto* inspect = app.add_subcommand("inspect", "Print one drop's relations and allocation");
  inspect->add_option("config", inspect_opts.config_path, "Config file or manifest.json");
  inspect->add_option("--drop", inspect_opts.drop_index, "Drop index to inspect");
  inspect->add_option("--fixture", inspect_opts.fixture,
                      "Inspect a named fixture (e.g. fig1) instead of a generated drop");

  CLI11_PARSE(app, argc, argv);

  if (campaign->parsed()) {
    if (*drops_opt) campaign_opts.drops = campaign_drops;
    if (*seed_opt) campaign_opts.seed = campaign_seed;
    return csd::cli::cmd_campaign(campaign_opts, std::cerr);
  }
  if (inspect->parsed()) {
    if (inspect_opts.fixture.empty() && inspect_opts.config_path.empty()) {
      std::cerr << "config error: inspect needs a config file or --fixture\n";
      return csd::cli::kExitConfigError;
    }
    return csd::cli::cmd_inspect(inspect_opts, std::cout, std::cerr);
  }
  return 0;
}
