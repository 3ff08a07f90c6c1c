#pragma once

#include <span>
#include <vector>

#include "covsim/descriptor.hpp"
#include "covsim/estimation.hpp"

namespace covsim {

struct CommsConfig {
  double r_com = 0.0;  // communication range
  double period = 0.0; // estimate update period T
};

/// Undirected proximity graph over agent positions: an edge exists iff the
/// inter-agent distance is at most the communication range.
class ProximityGraph {
 public:
  ProximityGraph() = default;
  static ProximityGraph build(std::span<const Pose> poses, double r_com);

  int size() const { return static_cast<int>(adjacency_.size()); }

  /// Neighbor ids of agent i, ascending. Throws on an unknown id.
  const std::vector<int>& neighbors(int i) const;

  /// BFS connectivity; an empty or single-node graph counts as connected.
  bool connected() const;

 private:
  std::vector<std::vector<int>> adjacency_;
};

/// Snapshot of a neighbor delivered over the fast channel.
struct NeighborInfo {
  int id = -1;
  Pose pose;
  DescriptorSpec adf;
  SupportSpec support;
};

/// Fast channel: every agent receives the current pose and footprint
/// parameters of each of its neighbors. Returned views are value snapshots.
std::vector<std::vector<NeighborInfo>> exchange_fast(
    std::span<const Pose> poses, std::span<const DescriptorSpec> specs,
    std::span<const SupportSpec> supports, const ProximityGraph& graph);

/// Periodic two-round estimate exchange at update instant t_k, run as a
/// synchronous barrier: all snapshots are published before any first
/// correction runs, and all overlap fields before any second correction.
/// Returns the number of field values shipped (message-size counter).
long long exchange_estimates(std::vector<EstimatorState>& estimators,
                             const ProximityGraph& graph, double delta,
                             double t_k);

}  // namespace covsim
