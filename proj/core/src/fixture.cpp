#include "csd/fixture.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#ifndef CSD_FIXTURE_DIR
#define CSD_FIXTURE_DIR "data/fixtures"
#endif

namespace csd {

namespace {

using nlohmann::json;

BoolMatrix bool_matrix_from(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  BoolMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, j.at(r).at(c).get<int>() != 0);
  return m;
}

GainMatrix gain_matrix_from(const json& j) {
  const int rows = static_cast<int>(j.size());
  const int cols = rows > 0 ? static_cast<int>(j.at(0).size()) : 0;
  GainMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = j.at(r).at(c).get<double>();
  return m;
}

Point point_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

GoldenFixture load_fixture(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  json j;
  try {
    in >> j;

    GoldenFixture f;
    f.name = j.at("name").get<std::string>();

    const json& c = j.at("config");
    f.config.area_side_m = c.at("area_side_m").get<double>();
    f.config.num_cues = c.at("num_cues").get<int>();
    f.config.num_pairs = c.at("num_pairs").get<int>();
    f.config.max_pair_dist_m = c.at("max_pair_dist_m").get<double>();
    f.config.carrier_ghz = c.at("carrier_ghz").get<double>();
    f.config.bandwidth_mhz = c.at("bandwidth_mhz").get<double>();
    f.config.rb_total = c.at("rb_total").get<int>();
    f.config.overhead_fraction = c.at("overhead_fraction").get<double>();
    f.config.n_s = c.at("n_s").get<int>();
    f.config.n_d = c.at("n_d").get<int>();
    f.config.pt_cue_dbm = c.at("pt_cue_dbm").get<double>();
    f.config.pt_due_dedicated_dbm = c.at("pt_due_dedicated_dbm").get<double>();
    f.config.p_max_dbm = c.at("p_max_dbm").get<double>();
    f.config.tau_due = c.at("tau_due").get<double>();
    f.config.tau_n_db = c.at("tau_n_db").get<double>();
    f.config.gamma_min_db = c.at("gamma_min_db").get<double>();
    f.config.noise_psd_dbm_hz = c.at("noise_psd_dbm_hz").get<double>();
    f.config.drops = c.at("drops").get<int>();
    f.config.rng_seed = c.at("rng_seed").get<std::uint64_t>();

    const json& pos = j.at("positions");
    f.scenario.enb_pos = point_from(pos.at("enb"));
    for (const auto& p : pos.at("cues")) f.scenario.cue_pos.push_back(point_from(p));
    for (const auto& p : pos.at("pairs"))
      f.scenario.pair_pos.push_back({point_from(p.at(0)), point_from(p.at(1))});

    const json& g = j.at("gains");
    f.scenario.gain_cue_enb = g.at("cue_enb").get<std::vector<double>>();
    f.scenario.gain_due_enb = g.at("due_enb").get<std::vector<double>>();
    f.scenario.gain_txj_rxj = g.at("direct").get<std::vector<double>>();
    f.scenario.gain_txi_rxj = gain_matrix_from(g.at("cross"));
    f.scenario.gain_cue_rxj = gain_matrix_from(g.at("cue_rx"));

    const json& e = j.at("expected");
    f.expected_cue_neighbor = bool_matrix_from(e.at("cue_neighbor"));
    f.expected_due_adjacency = bool_matrix_from(e.at("due_adjacency"));
    f.expected_shared_subgraphs = e.at("shared_subgraphs").get<std::vector<std::vector<int>>>();
    f.expected_dedicated_subgraphs =
        e.at("dedicated_subgraphs").get<std::vector<std::vector<int>>>();
    f.expected_shared_cliques =
        e.at("shared_cliques").get<std::vector<std::vector<Clique>>>();
    f.expected_dedicated_cliques =
        e.at("dedicated_cliques").get<std::vector<std::vector<Clique>>>();
    f.expected_shared_transmitters =
        e.at("shared_transmitters").get<std::vector<std::vector<int>>>();
    f.expected_dedicated_transmitters =
        e.at("dedicated_transmitters").get<std::vector<std::vector<int>>>();
    f.expected_quota = e.at("quota").get<std::vector<int>>();
    return f;
  } catch (const json::exception& ex) {
    throw std::runtime_error(path + ": malformed fixture: " + ex.what());
  }
}

std::string resolve_fixture_path(const std::string& name_or_path) {
  if (name_or_path.find('/') != std::string::npos || name_or_path.ends_with(".json"))
    return name_or_path;
  std::string dir = CSD_FIXTURE_DIR;
  if (const char* env = std::getenv("CSD_SIM_DATA_DIR")) dir = env;
  return dir + "/" + name_or_path + ".json";
}

}  // namespace csd
