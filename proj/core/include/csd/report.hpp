#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csd/campaign.hpp"
#include "csd/config.hpp"

namespace csd {

/// CSV schema shared by fig3.csv and fig4.csv:
///   scheme,num_pairs,pt_dbm,tau_n_db,mean_csum_bits,stderr,drops
/// UTF-8, LF line endings, fixed formatting: capacities rounded to whole
/// bits, dB/dBm values with two decimals. Rows are sorted by
/// (scheme, num_pairs, pt_dbm, tau_n_db).
std::string render_result_csv(const CampaignResult& result);

/// Writes `text` exactly (binary mode). Throws std::runtime_error on I/O
/// failure.
void write_file(const std::string& path, const std::string& text);

struct RunManifest {
  std::string tool;
  std::string version;
  std::string config_path;
  std::uint64_t wall_clock_ms = 0;
  std::vector<std::string> outputs;
  ResolvedConfig resolved;
};

std::string render_manifest_json(const RunManifest& manifest);
void write_manifest(const std::string& path, const RunManifest& manifest);

/// Rebuilds the resolved configuration from a manifest written by
/// write_manifest, so a campaign can be reproduced exactly from its
/// manifest. Throws ConfigError on malformed input.
ResolvedConfig load_manifest(const std::string& path);

/// True when the file's first non-whitespace byte is '{' (manifest JSON
/// rather than key-value config).
bool looks_like_manifest(const std::string& path);

}  // namespace csd
