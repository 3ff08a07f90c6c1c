#include "covsim/control.hpp"

namespace covsim {

Eigen::Vector3d coverage_gradient(const DescriptorSpec& spec, const Pose& pose,
                                  const SupportSpec& support,
                                  const ScalarField& tef_field,
                                  const ScalarField& sigma,
                                  const PenaltySpec& penalty) {
  require_compatible(tef_field, sigma, "coverage_gradient");
  const double radius = support_radius(spec, support);
  Eigen::Vector3d grad = Eigen::Vector3d::Zero();
  for_each_cell_in_disc(
      tef_field.spec, pose.position(), radius,
      [&](int ix, int iy, const Eigen::Vector2d& q) {
        const double fp = penalty_derivative(tef_field.at(ix, iy), penalty);
        if (fp == 0.0) return;
        grad -= fp * sigma.at(ix, iy) * adf_pose_gradient(spec, pose, q);
      });
  return grad * tef_field.spec.cell_area();
}

Eigen::Vector2d control_input(const AgentModel& model, const AgentState& state,
                              const ControlGains& gains,
                              const Eigen::Vector3d& coverage_grad,
                              const Eigen::Vector3d& avoidance_grad) {
  const auto g = g_matrix(model, state);
  const auto j = pose_jacobian(model, state);
  const Eigen::Matrix<double, 2, 3> projector = (j * g).transpose();
  return -gains.beta * (projector * coverage_grad) -
         gains.gamma * (projector * avoidance_grad) - gains.mu * state.v;
}

double lyapunov_value(double xi, double v_avoid,
                      std::span<const Eigen::Vector2d> velocities,
                      const ControlGains& gains) {
  double kinetic = 0.0;
  for (const auto& v : velocities) kinetic += v.squaredNorm();
  return xi + (gains.gamma / gains.beta) * v_avoid +
         kinetic / (2.0 * gains.beta);
}

}  // namespace covsim
