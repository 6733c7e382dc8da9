#pragma once

#include <cstdint>
#include <vector>

#include "csd/radio.hpp"
#include "csd/scenario.hpp"

namespace csd {

class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols, bool fill = false)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill ? 1 : 0) {}

  bool operator()(int r, int c) const { return data_[idx(r, c)] != 0; }
  void set(int r, int c, bool v) { data_[idx(r, c)] = v ? 1 : 0; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool operator==(const BoolMatrix&) const = default;

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Both neighbourhood relations of one drop.
///   cue_neighbor(c, j):   pair j must NOT reuse CUE c's RBs.
///   due_adjacency(i, j):  pairs i and j conflict and need orthogonal RBs;
///                         symmetric with a false diagonal.
struct NeighborRelations {
  BoolMatrix cue_neighbor;
  BoolMatrix due_adjacency;
};

/// CUE c is a neighbour of pair j when the pair's shared-region SINR under
/// c's interference alone (no co-reusers) falls below gamma_min.
BoolMatrix cue_neighbors(const Scenario& s, const PowerProfile& powers, const NoiseModel& noise,
                         double gamma_min_linear);

/// Pairs are neighbours when the probe signal of one transmitter, received at
/// the other receiver, exceeds NI / tau_n. The directional test is
/// symmetrised by OR. `probe_power_watt` is the dedicated-region transmit
/// power, the worst case across both regions.
BoolMatrix due_neighbors(const Scenario& s, const NoiseModel& noise, double tau_n_db,
                         double probe_power_watt);

NeighborRelations build_relations(const Scenario& s, const SimConfig& config,
                                  const PowerProfile& powers, const NoiseModel& noise);

/// Reuse subgraphs. shared[z] holds the pairs allowed on CUE z's RBs;
/// dedicated[z] holds pair z itself plus every pair able to reuse its default
/// RBs (its non-neighbours). Adjacency between members is the induced
/// due_adjacency.
struct SubgraphSet {
  std::vector<std::vector<int>> shared;     // one vertex set per CUE
  std::vector<std::vector<int>> dedicated;  // one vertex set per pair
};

SubgraphSet build_subgraphs(const NeighborRelations& relations);

using Clique = std::vector<int>;

/// All maximal cliques of the subgraph induced by `vertices` under
/// `adjacency`, via Bron-Kerbosch with pivoting. Output is canonical:
/// each clique ascending, cliques in lexicographic order.
std::vector<Clique> maximal_cliques(const std::vector<int>& vertices, const BoolMatrix& adjacency);

/// Maximal cliques of every subgraph.
struct CliqueSet {
  std::vector<std::vector<Clique>> shared;     // per CUE
  std::vector<std::vector<Clique>> dedicated;  // per pair

  /// N_mc per dedicated subgraph, the weights of the default-quota rule.
  std::vector<int> nmc_dedicated() const;
  std::vector<int> nmc_shared() const;
};

CliqueSet enumerate_cliques(const SubgraphSet& subgraphs, const BoolMatrix& due_adjacency);

}  // namespace csd
