#include "covsim/network.hpp"

#include <deque>
#include <stdexcept>

namespace covsim {

ProximityGraph ProximityGraph::build(std::span<const Pose> poses,
                                     double r_com) {
  ProximityGraph g;
  const std::size_t n = poses.size();
  g.adjacency_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double rho = (poses[i].position() - poses[j].position()).norm();
      if (rho <= r_com) {
        g.adjacency_[i].push_back(static_cast<int>(j));
        g.adjacency_[j].push_back(static_cast<int>(i));
      }
    }
  }
  return g;
}

const std::vector<int>& ProximityGraph::neighbors(int i) const {
  if (i < 0 || i >= size()) {
    throw std::out_of_range("ProximityGraph: unknown agent id " +
                            std::to_string(i));
  }
  return adjacency_[i];
}

bool ProximityGraph::connected() const {
  if (size() <= 1) return true;
  std::vector<bool> seen(adjacency_.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  int visited = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adjacency_[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++visited;
        queue.push_back(v);
      }
    }
  }
  return visited == size();
}

std::vector<std::vector<NeighborInfo>> exchange_fast(
    std::span<const Pose> poses, std::span<const DescriptorSpec> specs,
    std::span<const SupportSpec> supports, const ProximityGraph& graph) {
  std::vector<std::vector<NeighborInfo>> views(poses.size());
  for (std::size_t i = 0; i < poses.size(); ++i) {
    const auto& nbrs = graph.neighbors(static_cast<int>(i));
    views[i].reserve(nbrs.size());
    for (int j : nbrs) {
      views[i].push_back({j, poses[j], specs[j], supports[j]});
    }
  }
  return views;
}

long long exchange_estimates(std::vector<EstimatorState>& estimators,
                             const ProximityGraph& graph, double delta,
                             double t_k) {
  const int n = static_cast<int>(estimators.size());
  if (graph.size() != n) {
    throw std::invalid_argument(
        "exchange_estimates: graph size does not match the team size");
  }

  long long values_sent = 0;

  // round 1: publish snapshots
  std::vector<UpdateMessage> messages(n);
  for (int i = 0; i < n; ++i) {
    messages[i].sender = i;
    messages[i].I_hat_snapshot = estimators[i].I_hat;
    values_sent += static_cast<long long>(graph.neighbors(i).size()) *
                   estimators[i].I_hat.values.size();
  }

  auto gather = [&](int i) {
    std::vector<const UpdateMessage*> nbrs;
    for (int j : graph.neighbors(i)) nbrs.push_back(&messages[j]);
    return nbrs;
  };

  std::vector<ScalarField> corrected(n);
  for (int i = 0; i < n; ++i) {
    const auto nbrs = gather(i);
    corrected[i] = correction_round1(estimators[i], nbrs, delta, t_k);
    messages[i].d_tilde_o = compute_overlap(estimators[i], nbrs, delta, t_k);
    values_sent += static_cast<long long>(graph.neighbors(i).size()) *
                   messages[i].d_tilde_o.values.size();
  }

  // round 2: all overlap fields are published before any estimator commits
  for (int i = 0; i < n; ++i) {
    correction_round2(estimators[i], corrected[i], gather(i), t_k);
  }
  return values_sent;
}

}  // namespace covsim
