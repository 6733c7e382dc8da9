#include "csd/graph.hpp"

#include <algorithm>
#include <cassert>

namespace csd {

BoolMatrix cue_neighbors(const Scenario& s, const PowerProfile& powers, const NoiseModel& noise,
                         double gamma_min_linear) {
  const int c = s.num_cues();
  const int d = s.num_pairs();
  BoolMatrix out(c, d);
  for (int z = 0; z < c; ++z)
    for (int j = 0; j < d; ++j)
      out.set(z, j, sinr_shared_solo(z, j, s, powers, noise) < gamma_min_linear);
  return out;
}

BoolMatrix due_neighbors(const Scenario& s, const NoiseModel& noise, double tau_n_db,
                         double probe_power_watt) {
  const int d = s.num_pairs();
  const double tau_n = db_to_linear(tau_n_db);
  BoolMatrix out(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      const bool hit = s.gain_txi_rxj(i, j) * probe_power_watt > noise.ni_rx(j) / tau_n;
      if (hit) {
        out.set(i, j, true);
        out.set(j, i, true);  // neighbourship is mutual
      }
    }
  }
  return out;
}

NeighborRelations build_relations(const Scenario& s, const SimConfig& config,
                                  const PowerProfile& powers, const NoiseModel& noise) {
  NeighborRelations r;
  r.cue_neighbor = cue_neighbors(s, powers, noise, db_to_linear(config.gamma_min_db));
  r.due_adjacency = due_neighbors(s, noise, config.tau_n_db, powers.p_due_dedicated);
  return r;
}

SubgraphSet build_subgraphs(const NeighborRelations& relations) {
  const int c = relations.cue_neighbor.rows();
  const int d = relations.cue_neighbor.cols();

  SubgraphSet set;
  set.shared.resize(c);
  for (int z = 0; z < c; ++z)
    for (int j = 0; j < d; ++j)
      if (!relations.cue_neighbor(z, j)) set.shared[z].push_back(j);

  set.dedicated.resize(d);
  for (int z = 0; z < d; ++z) {
    for (int i = 0; i < d; ++i)
      if (i == z || !relations.due_adjacency(z, i)) set.dedicated[z].push_back(i);
  }
  return set;
}

namespace {

// Word-packed vertex set over the local indices of one subgraph.
class VertexBits {
 public:
  explicit VertexBits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  int count_and(const VertexBits& o) const {
    int n = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) n += __builtin_popcountll(w_[k] & o.w_[k]);
    return n;
  }

  VertexBits intersect(const VertexBits& o) const {
    VertexBits r(n_);
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] = w_[k] & o.w_[k];
    return r;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        const int bit = __builtin_ctzll(w);
        fn(static_cast<int>(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

struct BronKerbosch {
  const std::vector<VertexBits>& nbr;
  std::vector<int> current;
  std::vector<std::vector<int>>& out;

  void run(VertexBits p, VertexBits x) {
    if (p.empty() && x.empty()) {
      out.push_back(current);
      return;
    }

    // Pivot: the vertex of P u X covering the most of P prunes the most
    // branches.
    int pivot = -1, best = -1;
    auto consider = [&](int u) {
      const int c = p.count_and(nbr[u]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    };
    p.for_each(consider);
    x.for_each(consider);

    std::vector<int> candidates;
    p.for_each([&](int v) {
      if (!nbr[pivot].test(v)) candidates.push_back(v);
    });

    for (int v : candidates) {
      current.push_back(v);
      run(p.intersect(nbr[v]), x.intersect(nbr[v]));
      current.pop_back();
      p.reset(v);
      x.set(v);
    }
  }
};

}  // namespace

std::vector<Clique> maximal_cliques(const std::vector<int>& vertices,
                                    const BoolMatrix& adjacency) {
  std::vector<int> verts = vertices;
  std::sort(verts.begin(), verts.end());
  const int n = static_cast<int>(verts.size());
  if (n == 0) return {};

  std::vector<VertexBits> nbr(n, VertexBits(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && adjacency(verts[a], verts[b])) nbr[a].set(b);

  std::vector<std::vector<int>> local;
  VertexBits p(n), x(n);
  for (int i = 0; i < n; ++i) p.set(i);
  BronKerbosch bk{nbr, {}, local};
  bk.run(p, x);

  std::vector<Clique> cliques(local.size());
  for (std::size_t k = 0; k < local.size(); ++k) {
    for (int v : local[k]) cliques[k].push_back(verts[v]);
    std::sort(cliques[k].begin(), cliques[k].end());
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

CliqueSet enumerate_cliques(const SubgraphSet& subgraphs, const BoolMatrix& due_adjacency) {
  CliqueSet set;
  set.shared.reserve(subgraphs.shared.size());
  for (const auto& verts : subgraphs.shared)
    set.shared.push_back(maximal_cliques(verts, due_adjacency));
  set.dedicated.reserve(subgraphs.dedicated.size());
  for (const auto& verts : subgraphs.dedicated)
    set.dedicated.push_back(maximal_cliques(verts, due_adjacency));
  return set;
}

std::vector<int> CliqueSet::nmc_dedicated() const {
  std::vector<int> counts(dedicated.size());
  for (std::size_t z = 0; z < dedicated.size(); ++z)
    counts[z] = static_cast<int>(dedicated[z].size());
  return counts;
}

std::vector<int> CliqueSet::nmc_shared() const {
  std::vector<int> counts(shared.size());
  for (std::size_t z = 0; z < shared.size(); ++z) counts[z] = static_cast<int>(shared[z].size());
  return counts;
}

}  // namespace csd
