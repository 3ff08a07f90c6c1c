#pragma once

#include <Eigen/Dense>

#include "covsim/descriptor.hpp"

namespace covsim {

/// Vehicle model. Both variants are driven through a two-dimensional
/// pseudo-acceleration input; the unicycle carries the no-side-slip
/// constraint through its kinematics matrix.
struct AgentModel {
  enum class Kind { DoubleIntegrator, DynamicUnicycle };

  Kind kind = Kind::DoubleIntegrator;
  double mass = 1.0;
  double inertia = 1.0;  // used by the unicycle only

  int state_dim() const {
    return kind == Kind::DoubleIntegrator ? 2 : 3;
  }
  static constexpr int velocity_dim = 2;
};

/// Generalized coordinates plus pseudo-velocities.
/// DoubleIntegrator: x = [x, y], v = [vx, vy].
/// DynamicUnicycle:  x = [x, y, theta], v = [forward speed, turn rate].
struct AgentState {
  Eigen::VectorXd x;
  Eigen::Vector2d v = Eigen::Vector2d::Zero();
};

/// Pose extraction map h(x). The double integrator has no heading; its pose
/// carries theta = 0.
Pose pose_map(const AgentModel& model, const AgentState& state);

/// Jacobian of pose_map, 3 x state_dim.
Eigen::Matrix<double, 3, Eigen::Dynamic> pose_jacobian(const AgentModel& model,
                                                       const AgentState& state);

/// Kinematics matrix G(x) with xdot = G(x) v; its columns annihilate the
/// Pfaffian constraint rows.
Eigen::Matrix<double, Eigen::Dynamic, 2> g_matrix(const AgentModel& model,
                                                  const AgentState& state);

/// Advances xdot = G(x) v, vdot = u over dt with fixed-step RK4, the input
/// held constant across the step. The heading is wrapped afterwards.
AgentState step(const AgentModel& model, const AgentState& state,
                const Eigen::Vector2d& u, double dt);

/// Actuator-level input realizing the pseudo-acceleration u:
/// tau = (G^T D)^{-1} (B~ u + c~). Diagnostic only; not used for integration.
Eigen::Vector2d torque_from_pseudo_accel(const AgentModel& model,
                                         const AgentState& state,
                                         const Eigen::Vector2d& u);

}  // namespace covsim
