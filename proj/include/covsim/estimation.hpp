#pragma once

#include <span>

#include "covsim/grid.hpp"

namespace covsim {

/// Membership tolerance for the overlap set: a neighbor contribution counts
/// as overlapping only when it exceeds the decayed snapshot by more than
/// this, suppressing floating-point membership flicker.
inline constexpr double kOverlapTol = 1e-12;

/// Per-agent information estimate. Between update instants the agent folds
/// in only its own contribution; the accumulated own contribution since the
/// last update (decay-weighted) is kept in d_tilde for the exchange rounds.
struct EstimatorState {
  ScalarField I_hat;          // current estimate
  ScalarField d_tilde;        // own contribution since the last update
  ScalarField last_snapshot;  // estimate as of the previous update instant
  double t_last = 0.0;        // time of the previous update instant

  static EstimatorState init(const ScalarField& info0, double t0);
};

/// Payload exchanged at an update instant. The snapshot is published in
/// round one; the overlapped own-contribution field in round two.
struct UpdateMessage {
  int sender = -1;
  ScalarField I_hat_snapshot;
  ScalarField d_tilde_o;
};

/// Advances the estimate and the own-contribution accumulator by one step of
/// the decay dynamics, using the agent's own footprint raster as the source.
void propagate(EstimatorState& est, const ScalarField& own_adf_raster,
               double delta, double dt);

/// First correction at update instant t_k, applied to the published
/// snapshots of the neighbors. Inside the own-contribution support the
/// neighbor excesses over the decayed snapshot are added; outside, the best
/// single source wins.
ScalarField correction_round1(const EstimatorState& est,
                              std::span<const UpdateMessage* const> neighbors,
                              double delta, double t_k);

/// Overlapped portion of d_tilde: the own contribution restricted to cells
/// where some neighbor also reports fresh coverage.
ScalarField compute_overlap(const EstimatorState& est,
                            std::span<const UpdateMessage* const> neighbors,
                            double delta, double t_k);

/// Second correction: outside the own support, neighbor overlaps are summed
/// with the largest one removed (it was already counted in round one).
/// Commits the result, resets d_tilde, and stores the new snapshot.
void correction_round2(EstimatorState& est, const ScalarField& I_minus,
                       std::span<const UpdateMessage* const> neighbors,
                       double t_k);

/// Radius of the region around an agent where its post-exchange estimate is
/// exact: r* = R_com - r_cov_max - (N - 1) * ell_max_T. May be <= 0 (empty).
double exactness_region(double r_com, double r_cov_max, int n_agents,
                        double ell_max_T);

}  // namespace covsim
