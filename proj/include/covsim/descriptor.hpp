#pragma once

#include <Eigen/Dense>

#include "covsim/grid.hpp"

namespace covsim {

/// Wraps an angle to (-pi, pi].
double wrap_angle(double theta);

/// Planar pose: position plus heading measured counter-clockwise from +x.
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Eigen::Vector2d position() const { return {x, y}; }
};

/// Parametric sensing footprint of an agent. The Gaussian variant is a
/// (possibly anisotropic) bell of peak amplitude A; the GaussianFov variant
/// multiplies it by a smooth field-of-view mask of half-angle phi/2 around
/// the heading, with sigmoid slope k at the cone boundary.
struct DescriptorSpec {
  enum class Kind { Gaussian, GaussianFov };

  Kind kind = Kind::Gaussian;
  double amplitude = 1.0;                  // A > 0
  Eigen::Vector2d sigma2{1.0, 1.0};        // diagonal of the covariance
  double fov_slope = 0.0;                  // k > 0 (GaussianFov only)
  double fov_angle = 0.0;                  // phi in (0, 2*pi) (GaussianFov only)
};

/// Support threshold used to truncate unbounded footprints.
struct SupportSpec {
  double epsilon = 0.0;
};

double adf_value(const DescriptorSpec& spec, const Pose& pose,
                 const Eigen::Vector2d& q);

/// Analytic (d/dx, d/dy, d/dtheta) of adf_value at fixed q.
Eigen::Vector3d adf_pose_gradient(const DescriptorSpec& spec, const Pose& pose,
                                  const Eigen::Vector2d& q);

/// Radius of the disc outside of which the footprint stays below epsilon.
/// For the FOV variant this is the same (conservative) Gaussian bound.
double support_radius(const DescriptorSpec& spec, const SupportSpec& support);

/// Value with the support disc applied: zero outside it.
double adf_value_clipped(const DescriptorSpec& spec, const Pose& pose,
                         const SupportSpec& support, const Eigen::Vector2d& q);

/// Gradient with the same clipping as adf_value_clipped, so the support of
/// the reported gradient never exceeds the support of the clipped value.
Eigen::Vector3d adf_pose_gradient_clipped(const DescriptorSpec& spec,
                                          const Pose& pose,
                                          const SupportSpec& support,
                                          const Eigen::Vector2d& q);

/// Writes (accumulate = false) or adds (accumulate = true) the footprint
/// into `target` at every cell center within the support disc. Cells outside
/// the disc are left untouched.
void rasterize_adf(const DescriptorSpec& spec, const Pose& pose,
                   const SupportSpec& support, ScalarField& target,
                   bool accumulate);

}  // namespace covsim
