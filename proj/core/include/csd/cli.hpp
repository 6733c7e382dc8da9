#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace csd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

struct CampaignOptions {
  std::string config_path;  // key-value config or a manifest.json
  std::string out_dir;
  std::optional<int> drops;           // --drops override
  std::optional<std::uint64_t> seed;  // --seed override
};

/// Runs the full campaign and writes fig3.csv, fig4.csv and manifest.json
/// into out_dir. Returns kExitOk, kExitConfigError (diagnostic on `diag`)
/// or kExitIoError.
int cmd_campaign(const CampaignOptions& options, std::ostream& diag);

struct InspectOptions {
  std::string config_path;
  int drop_index = 0;
  std::string fixture;  // empty, a fixture name ("fig1"), or a path
};

/// Prints one drop's relations, cliques and allocation in human-readable
/// form on `out`. Returns kExitOk or kExitConfigError.
int cmd_inspect(const InspectOptions& options, std::ostream& out, std::ostream& diag);

}  // namespace csd::cli
