#include "covsim/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace covsim {

namespace {

void check_state(const AgentModel& model, const AgentState& state,
                 const char* op) {
  if (state.x.size() != model.state_dim()) {
    throw std::invalid_argument(std::string(op) +
                                ": state dimension does not match the model");
  }
}

}  // namespace

Pose pose_map(const AgentModel& model, const AgentState& state) {
  check_state(model, state, "pose_map");
  if (model.kind == AgentModel::Kind::DoubleIntegrator) {
    return {state.x[0], state.x[1], 0.0};
  }
  return {state.x[0], state.x[1], wrap_angle(state.x[2])};
}

Eigen::Matrix<double, 3, Eigen::Dynamic> pose_jacobian(
    const AgentModel& model, const AgentState& state) {
  check_state(model, state, "pose_jacobian");
  if (model.kind == AgentModel::Kind::DoubleIntegrator) {
    Eigen::Matrix<double, 3, Eigen::Dynamic> j(3, 2);
    j.setZero();
    j(0, 0) = 1.0;
    j(1, 1) = 1.0;
    return j;
  }
  return Eigen::Matrix3d::Identity();
}

Eigen::Matrix<double, Eigen::Dynamic, 2> g_matrix(const AgentModel& model,
                                                  const AgentState& state) {
  check_state(model, state, "g_matrix");
  if (model.kind == AgentModel::Kind::DoubleIntegrator) {
    return Eigen::Matrix2d::Identity();
  }
  Eigen::Matrix<double, 3, 2> g;
  const double th = state.x[2];
  g << std::cos(th), 0.0,
       std::sin(th), 0.0,
       0.0,          1.0;
  return g;
}

AgentState step(const AgentModel& model, const AgentState& state,
                const Eigen::Vector2d& u, double dt) {
  check_state(model, state, "step");
  if (!(dt > 0.0)) {
    throw std::invalid_argument("step: dt must be > 0");
  }
  if (!u.allFinite()) {
    throw std::invalid_argument("step: non-finite pseudo-acceleration");
  }

  AgentState out = state;
  if (model.kind == AgentModel::Kind::DoubleIntegrator) {
    // xdot = v, vdot = u: constant-acceleration kinematics, RK4 is exact.
    out.x += dt * state.v + (0.5 * dt * dt) * u;
    out.v += dt * u;
    return out;
  }

  // Unicycle RK4 on (x, y, theta, v, w) with u frozen.
  const auto deriv = [&u](const Eigen::Matrix<double, 5, 1>& z) {
    Eigen::Matrix<double, 5, 1> dz;
    dz[0] = std::cos(z[2]) * z[3];
    dz[1] = std::sin(z[2]) * z[3];
    dz[2] = z[4];
    dz[3] = u[0];
    dz[4] = u[1];
    return dz;
  };
  Eigen::Matrix<double, 5, 1> z;
  z << state.x[0], state.x[1], state.x[2], state.v[0], state.v[1];
  const auto k1 = deriv(z);
  const auto k2 = deriv(z + (0.5 * dt) * k1);
  const auto k3 = deriv(z + (0.5 * dt) * k2);
  const auto k4 = deriv(z + dt * k3);
  z += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

  out.x[0] = z[0];
  out.x[1] = z[1];
  out.x[2] = wrap_angle(z[2]);
  out.v << z[3], z[4];
  return out;
}

Eigen::Vector2d torque_from_pseudo_accel(const AgentModel& model,
                                         const AgentState& state,
                                         const Eigen::Vector2d& u) {
  check_state(model, state, "torque_from_pseudo_accel");

  const Eigen::Matrix<double, Eigen::Dynamic, 2> g = g_matrix(model, state);
  Eigen::MatrixXd inertia_matrix;   // B
  Eigen::MatrixXd input_map;        // D
  Eigen::VectorXd coriolis;         // c(x, G v) + B Gdot v

  if (model.kind == AgentModel::Kind::DoubleIntegrator) {
    inertia_matrix = model.mass * Eigen::Matrix2d::Identity();
    input_map = Eigen::Matrix2d::Identity();
    coriolis = Eigen::Vector2d::Zero();
  } else {
    inertia_matrix = Eigen::Vector3d(model.mass, model.mass, model.inertia)
                         .asDiagonal();
    input_map = g;  // force along the heading, torque about the vertical
    const double th = state.x[2];
    Eigen::Matrix<double, 3, 2> gdot;
    gdot << -std::sin(th) * state.v[1], 0.0,
            std::cos(th) * state.v[1], 0.0,
            0.0,                        0.0;
    coriolis = inertia_matrix * (gdot * state.v);
  }

  const Eigen::Matrix2d gtd = g.transpose() * input_map;
  if (std::abs(gtd.determinant()) < 1e-12) {
    throw std::runtime_error("torque_from_pseudo_accel: G^T D is singular");
  }
  const Eigen::Matrix2d b_tilde = g.transpose() * inertia_matrix * g;
  const Eigen::Vector2d c_tilde = g.transpose() * coriolis;
  return gtd.inverse() * (b_tilde * u + c_tilde);
}

}  // namespace covsim
