#include "covsim/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace covsim {

EstimatorState EstimatorState::init(const ScalarField& info0, double t0) {
  EstimatorState est;
  est.I_hat = info0;
  est.d_tilde = ScalarField::zeros(info0.spec);
  est.last_snapshot = info0;
  est.t_last = t0;
  return est;
}

void propagate(EstimatorState& est, const ScalarField& own_adf_raster,
               double delta, double dt) {
  require_compatible(est.I_hat, own_adf_raster, "propagate");
  if (!(dt > 0.0)) {
    throw std::invalid_argument("propagate: dt must be > 0");
  }
  if (delta == 0.0) {
    est.I_hat.values += own_adf_raster.values * dt;
    est.d_tilde.values += own_adf_raster.values * dt;
  } else {
    const double fac = std::exp(delta * dt);
    const double gain = std::expm1(delta * dt) / delta;
    est.I_hat.values = est.I_hat.values * fac + own_adf_raster.values * gain;
    est.d_tilde.values =
        est.d_tilde.values * fac + own_adf_raster.values * gain;
  }
}

namespace {

double period_decay(const EstimatorState& est, double delta, double t_k) {
  const double period = t_k - est.t_last;
  if (!(period > 0.0)) {
    throw std::invalid_argument(
        "estimate correction: update instant not after the previous one");
  }
  return std::exp(delta * period);
}

}  // namespace

ScalarField correction_round1(const EstimatorState& est,
                              std::span<const UpdateMessage* const> neighbors,
                              double delta, double t_k) {
  if (est.last_snapshot.values.size() == 0) {
    throw std::invalid_argument("correction_round1: missing snapshot");
  }
  const double fac = period_decay(est, delta, t_k);
  const Eigen::ArrayXd decayed = est.last_snapshot.values * fac;

  Eigen::ArrayXd excess_sum = Eigen::ArrayXd::Zero(decayed.size());
  Eigen::ArrayXd best = decayed;
  for (const UpdateMessage* msg : neighbors) {
    require_compatible(est.I_hat, msg->I_hat_snapshot, "correction_round1");
    excess_sum += (msg->I_hat_snapshot.values - decayed).max(0.0);
    best = best.max(msg->I_hat_snapshot.values);
  }

  ScalarField out{est.I_hat.spec, {}};
  out.values = (est.d_tilde.values > 0.0)
                   .select(est.I_hat.values + excess_sum, best);
  return out;
}

ScalarField compute_overlap(const EstimatorState& est,
                            std::span<const UpdateMessage* const> neighbors,
                            double delta, double t_k) {
  const double fac = period_decay(est, delta, t_k);
  const Eigen::ArrayXd decayed = est.last_snapshot.values * fac;

  Eigen::Array<bool, Eigen::Dynamic, 1> overlapped =
      Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(decayed.size(), false);
  for (const UpdateMessage* msg : neighbors) {
    require_compatible(est.I_hat, msg->I_hat_snapshot, "compute_overlap");
    overlapped =
        overlapped || (msg->I_hat_snapshot.values - decayed > kOverlapTol);
  }

  ScalarField out{est.I_hat.spec, {}};
  out.values = overlapped.select(est.d_tilde.values, 0.0);
  return out;
}

void correction_round2(EstimatorState& est, const ScalarField& I_minus,
                       std::span<const UpdateMessage* const> neighbors,
                       double t_k) {
  require_compatible(est.I_hat, I_minus, "correction_round2");
  Eigen::ArrayXd overlap_sum = Eigen::ArrayXd::Zero(I_minus.values.size());
  Eigen::ArrayXd overlap_max = Eigen::ArrayXd::Zero(I_minus.values.size());
  for (const UpdateMessage* msg : neighbors) {
    require_compatible(est.I_hat, msg->d_tilde_o, "correction_round2");
    overlap_sum += msg->d_tilde_o.values;
    overlap_max = overlap_max.max(msg->d_tilde_o.values);
  }
  est.I_hat.values =
      (est.d_tilde.values > 0.0)
          .select(I_minus.values,
                  I_minus.values + overlap_sum - overlap_max);
  est.d_tilde.values.setZero();
  est.last_snapshot = est.I_hat;
  est.t_last = t_k;
}

double exactness_region(double r_com, double r_cov_max, int n_agents,
                        double ell_max_T) {
  return r_com - r_cov_max - (n_agents - 1) * ell_max_T;
}

}  // namespace covsim
