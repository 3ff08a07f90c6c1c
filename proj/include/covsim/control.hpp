#pragma once

#include <Eigen/Dense>

#include <span>

#include "covsim/descriptor.hpp"
#include "covsim/dynamics.hpp"
#include "covsim/grid.hpp"

namespace covsim {

struct ControlGains {
  double beta = 0.0;   // coverage gain
  double gamma = 0.0;  // avoidance gain
  double mu = 0.0;     // damping
};

/// Gradient of the error index with respect to the agent pose:
/// -sum over the agent's support disc of f'(e) * d(adf)/d(pose) * sigma * dA.
/// `tef_field` is the (true or estimated) error field on the shared grid.
Eigen::Vector3d coverage_gradient(const DescriptorSpec& spec, const Pose& pose,
                                  const SupportSpec& support,
                                  const ScalarField& tef_field,
                                  const ScalarField& sigma,
                                  const PenaltySpec& penalty);

/// u = -beta G^T J^T grad_xi - gamma G^T J^T grad_v - mu v, with J the pose
/// Jacobian. Gradient components the kinematics cannot realize (e.g. lateral
/// for the unicycle) are annihilated by G^T.
Eigen::Vector2d control_input(const AgentModel& model, const AgentState& state,
                              const ControlGains& gains,
                              const Eigen::Vector3d& coverage_grad,
                              const Eigen::Vector3d& avoidance_grad);

/// Diagnostic V = xi + (gamma/beta) v_avoid + 1/(2 beta) sum ||v_i||^2.
double lyapunov_value(double xi, double v_avoid,
                      std::span<const Eigen::Vector2d> velocities,
                      const ControlGains& gains);

}  // namespace covsim
