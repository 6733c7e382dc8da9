#include "csd/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace csd {

namespace {

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_result_csv(const CampaignResult& result) {
  std::vector<std::size_t> order(result.keys.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const CellKey& ka = result.keys[a];
    const CellKey& kb = result.keys[b];
    return std::tie(ka.scheme, ka.num_pairs, ka.pt_dbm, ka.tau_n_db) <
           std::tie(kb.scheme, kb.num_pairs, kb.pt_dbm, kb.tau_n_db);
  });

  std::string out = "scheme,num_pairs,pt_dbm,tau_n_db,mean_csum_bits,stderr,drops\n";
  for (std::size_t k : order) {
    const CellKey& key = result.keys[k];
    const CellStats& stats = result.stats[k];
    out += to_string(key.scheme);
    out += ',';
    out += std::to_string(key.num_pairs);
    out += ',';
    out += fixed2(key.pt_dbm);
    out += ',';
    out += fixed2(key.tau_n_db);
    out += ',';
    out += std::to_string(std::llround(stats.mean_csum));
    out += ',';
    out += fixed2(stats.stderr_csum);
    out += ',';
    out += std::to_string(stats.drops);
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

namespace {

using nlohmann::json;

json scenario_to_json(const SimConfig& c) {
  return json{{"area_side_m", c.area_side_m},
              {"num_cues", c.num_cues},
              {"num_pairs", c.num_pairs},
              {"max_pair_dist_m", c.max_pair_dist_m},
              {"carrier_ghz", c.carrier_ghz},
              {"bandwidth_mhz", c.bandwidth_mhz},
              {"rb_total", c.rb_total},
              {"overhead_fraction", c.overhead_fraction},
              {"n_s", c.n_s},
              {"n_d", c.n_d},
              {"pt_cue_dbm", c.pt_cue_dbm},
              {"pt_due_dedicated_dbm", c.pt_due_dedicated_dbm},
              {"p_max_dbm", c.p_max_dbm},
              {"tau_due", c.tau_due},
              {"tau_n_db", c.tau_n_db},
              {"gamma_min_db", c.gamma_min_db},
              {"noise_psd_dbm_hz", c.noise_psd_dbm_hz},
              {"drops", c.drops},
              {"rng_seed", c.rng_seed}};
}

SimConfig scenario_from_json(const json& j) {
  SimConfig c;
  c.area_side_m = j.at("area_side_m").get<double>();
  c.num_cues = j.at("num_cues").get<int>();
  c.num_pairs = j.at("num_pairs").get<int>();
  c.max_pair_dist_m = j.at("max_pair_dist_m").get<double>();
  c.carrier_ghz = j.at("carrier_ghz").get<double>();
  c.bandwidth_mhz = j.at("bandwidth_mhz").get<double>();
  c.rb_total = j.at("rb_total").get<int>();
  c.overhead_fraction = j.at("overhead_fraction").get<double>();
  c.n_s = j.at("n_s").get<int>();
  c.n_d = j.at("n_d").get<int>();
  c.pt_cue_dbm = j.at("pt_cue_dbm").get<double>();
  c.pt_due_dedicated_dbm = j.at("pt_due_dedicated_dbm").get<double>();
  c.p_max_dbm = j.at("p_max_dbm").get<double>();
  c.tau_due = j.at("tau_due").get<double>();
  c.tau_n_db = j.at("tau_n_db").get<double>();
  c.gamma_min_db = j.at("gamma_min_db").get<double>();
  c.noise_psd_dbm_hz = j.at("noise_psd_dbm_hz").get<double>();
  c.drops = j.at("drops").get<int>();
  c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  return c;
}

}  // namespace

std::string render_manifest_json(const RunManifest& manifest) {
  json campaign;
  campaign["pair_counts"] = manifest.resolved.campaign.pair_counts;
  campaign["pt_dbm_values"] = manifest.resolved.campaign.pt_dbm_values;
  campaign["tau_n_values_db"] = manifest.resolved.campaign.tau_n_values_db;
  std::vector<std::string> schemes;
  for (Scheme s : manifest.resolved.campaign.schemes) schemes.push_back(to_string(s));
  campaign["schemes"] = schemes;
  campaign["drops"] = manifest.resolved.campaign.drops;

  json j;
  j["tool"] = manifest.tool;
  j["version"] = manifest.version;
  j["config_path"] = manifest.config_path;
  j["wall_clock_ms"] = manifest.wall_clock_ms;
  j["outputs"] = manifest.outputs;
  j["resolved"] = json{{"scenario", scenario_to_json(manifest.resolved.scenario)},
                       {"campaign", campaign}};
  return j.dump(2) + "\n";
}

void write_manifest(const std::string& path, const RunManifest& manifest) {
  write_file(path, render_manifest_json(manifest));
}

ResolvedConfig load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("", 0, path + ": cannot open manifest");
  json j;
  try {
    in >> j;
    ResolvedConfig resolved;
    resolved.scenario = scenario_from_json(j.at("resolved").at("scenario"));
    const json& campaign = j.at("resolved").at("campaign");
    CampaignSpec& spec = resolved.campaign;
    spec.base = resolved.scenario;
    spec.pair_counts = campaign.at("pair_counts").get<std::vector<int>>();
    spec.pt_dbm_values = campaign.at("pt_dbm_values").get<std::vector<double>>();
    spec.tau_n_values_db = campaign.at("tau_n_values_db").get<std::vector<double>>();
    for (const auto& name : campaign.at("schemes").get<std::vector<std::string>>()) {
      const auto scheme = scheme_from_string(name);
      if (!scheme) throw ConfigError("schemes", 0, path + ": unknown scheme '" + name + "'");
      spec.schemes.push_back(*scheme);
    }
    spec.drops = campaign.at("drops").get<int>();
    return resolved;
  } catch (const json::exception& e) {
    throw ConfigError("", 0, path + ": malformed manifest: " + e.what());
  }
}

bool looks_like_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  char ch;
  while (in.get(ch)) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    return ch == '{';
  }
  return false;
}

}  // namespace csd
