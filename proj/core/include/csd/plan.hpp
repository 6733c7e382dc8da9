#pragma once

#include <algorithm>
#include <vector>

namespace csd {

/// Per-RB outcome of an allocation run. RBs are indexed globally:
/// [0, n_shared) is the shared region, [n_shared, n_shared + n_dedicated)
/// the dedicated region.
struct AllocationPlan {
  int n_shared = 0;
  int n_dedicated = 0;

  std::vector<int> shared_owner;               // n_shared entries, owning CUE id
  std::vector<int> dedicated_owner;            // n_dedicated entries, pair id or -1
  std::vector<std::vector<int>> transmitters;  // per RB, ascending pair ids

  std::vector<double> shared_power;  // per pair, restricted shared-region watts
  double dedicated_power = 0.0;      // watts, common to all pairs

  int total_rbs() const { return n_shared + n_dedicated; }
  bool is_shared_rb(int rb) const { return rb < n_shared; }

  bool transmits(int pair, int rb) const {
    const auto& t = transmitters[rb];
    return std::binary_search(t.begin(), t.end(), pair);
  }

  /// Linear transmit power of `pair` on `rb`; 0 when not transmitting.
  double tx_power(int pair, int rb) const {
    if (!transmits(pair, rb)) return 0.0;
    return is_shared_rb(rb) ? shared_power[pair] : dedicated_power;
  }

  bool operator==(const AllocationPlan&) const = default;
};

/// D2D sum-capacity breakdown for one drop, in bits per frame.
struct CapacityReport {
  double c_shared = 0.0;
  double c_dedicated = 0.0;
  std::vector<double> per_pair;

  double c_sum() const { return c_shared + c_dedicated; }
};

}  // namespace csd
