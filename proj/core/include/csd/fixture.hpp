#pragma once

#include <string>
#include <vector>

#include "csd/graph.hpp"
#include "csd/scenario.hpp"

namespace csd {

/// Hand-built drop with a known conflict structure, checked into
/// data/fixtures/. The gain tables are authored directly (positions are
/// nominal, for display only) so that the neighbour relations, subgraph
/// decomposition, clique enumeration and allocation outcome are all known in
/// closed form and stored alongside the inputs.
struct GoldenFixture {
  std::string name;
  SimConfig config;
  Scenario scenario;

  BoolMatrix expected_cue_neighbor;
  BoolMatrix expected_due_adjacency;
  std::vector<std::vector<int>> expected_shared_subgraphs;
  std::vector<std::vector<int>> expected_dedicated_subgraphs;
  std::vector<std::vector<Clique>> expected_shared_cliques;
  std::vector<std::vector<Clique>> expected_dedicated_cliques;
  std::vector<std::vector<int>> expected_shared_transmitters;     // per CUE
  std::vector<std::vector<int>> expected_dedicated_transmitters;  // per owner pair
  std::vector<int> expected_quota;
};

/// Loads a fixture JSON file. Throws std::runtime_error on malformed input.
GoldenFixture load_fixture(const std::string& path);

/// Resolves a fixture name ("fig1") or path. Names are looked up in
/// $CSD_SIM_DATA_DIR when set, else in the source-tree data directory.
std::string resolve_fixture_path(const std::string& name_or_path);

}  // namespace csd
