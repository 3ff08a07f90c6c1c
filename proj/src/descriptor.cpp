#include "covsim/descriptor.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covsim {

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double w = std::remainder(theta, two_pi);
  if (w <= -std::numbers::pi) w += two_pi;
  return w;
}

namespace {

struct FovFrame {
  double r1, r2;    // coordinates in the heading-aligned frame
  double c, s;      // cos/sin of (theta - pi/2)
};

FovFrame fov_frame(const Pose& pose, const Eigen::Vector2d& q) {
  const double a = pose.theta - 0.5 * std::numbers::pi;
  const double c = std::cos(a);
  const double s = std::sin(a);
  const double dxq = q.x() - pose.x;
  const double dyq = q.y() - pose.y;
  return {dxq * c + dyq * s, -dxq * s + dyq * c, c, s};
}

double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double gaussian_part(const DescriptorSpec& spec, const Pose& pose,
                     const Eigen::Vector2d& q, Eigen::Vector2d* rotated_out) {
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  const Eigen::Vector2d u = q - pose.position();
  // body-frame offset: [cos t, sin t; -sin t, cos t] * (q - Sp)
  const Eigen::Vector2d v{c * u.x() + s * u.y(), -s * u.x() + c * u.y()};
  if (rotated_out) *rotated_out = v;
  const double quad =
      v.x() * v.x() / spec.sigma2.x() + v.y() * v.y() / spec.sigma2.y();
  return spec.amplitude * std::exp(-0.5 * quad);
}

double fov_factor(const DescriptorSpec& spec, const FovFrame& f) {
  const double ch = std::cos(0.5 * spec.fov_angle);
  const double sh = std::sin(0.5 * spec.fov_angle);
  const double right = logistic(spec.fov_slope * (f.r1 * ch + f.r2 * sh));
  const double left = logistic(spec.fov_slope * (-f.r1 * ch + f.r2 * sh));
  return right * left;
}

}  // namespace

double adf_value(const DescriptorSpec& spec, const Pose& pose,
                 const Eigen::Vector2d& q) {
  const double g = gaussian_part(spec, pose, q, nullptr);
  if (spec.kind == DescriptorSpec::Kind::Gaussian) return g;
  return g * fov_factor(spec, fov_frame(pose, q));
}

Eigen::Vector3d adf_pose_gradient(const DescriptorSpec& spec, const Pose& pose,
                                  const Eigen::Vector2d& q) {
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  Eigen::Vector2d v;
  const double g = gaussian_part(spec, pose, q, &v);
  const Eigen::Vector2d u = q - pose.position();
  const Eigen::Vector2d mv{v.x() / spec.sigma2.x(), v.y() / spec.sigma2.y()};

  // d/d(position) of the exponent: R^T M v; d/dtheta: -v^T M R' u.
  Eigen::Vector3d grad_g;
  grad_g.x() = g * (c * mv.x() - s * mv.y());
  grad_g.y() = g * (s * mv.x() + c * mv.y());
  const Eigen::Vector2d rprime_u{-s * u.x() + c * u.y(),
                                 -c * u.x() - s * u.y()};
  grad_g.z() = -g * mv.dot(rprime_u);

  if (spec.kind == DescriptorSpec::Kind::Gaussian) return grad_g;

  const FovFrame f = fov_frame(pose, q);
  const double ch = std::cos(0.5 * spec.fov_angle);
  const double sh = std::sin(0.5 * spec.fov_angle);
  const double k = spec.fov_slope;
  const double fr = logistic(k * (f.r1 * ch + f.r2 * sh));
  const double fl = logistic(k * (-f.r1 * ch + f.r2 * sh));

  // dr1 = (-c, -s, r2), dr2 = (s, -c, -r1) w.r.t. (x, y, theta)
  const Eigen::Vector3d dr1{-f.c, -f.s, f.r2};
  const Eigen::Vector3d dr2{f.s, -f.c, -f.r1};
  const Eigen::Vector3d da_r = k * (ch * dr1 + sh * dr2);
  const Eigen::Vector3d da_l = k * (-ch * dr1 + sh * dr2);
  const Eigen::Vector3d dfr = fr * (1.0 - fr) * da_r;
  const Eigen::Vector3d dfl = fl * (1.0 - fl) * da_l;

  return grad_g * (fr * fl) + g * (dfr * fl + fr * dfl);
}

double support_radius(const DescriptorSpec& spec, const SupportSpec& support) {
  if (!(support.epsilon > 0.0)) {
    throw std::invalid_argument("support_radius: epsilon must be > 0");
  }
  if (support.epsilon >= spec.amplitude) {
    throw std::invalid_argument(
        "support_radius: epsilon >= amplitude gives an empty support");
  }
  const double smax = std::max(spec.sigma2.x(), spec.sigma2.y());
  return std::sqrt(2.0 * smax * std::log(spec.amplitude / support.epsilon));
}

double adf_value_clipped(const DescriptorSpec& spec, const Pose& pose,
                         const SupportSpec& support, const Eigen::Vector2d& q) {
  const double r = support_radius(spec, support);
  if ((q - pose.position()).squaredNorm() > r * r) return 0.0;
  return adf_value(spec, pose, q);
}

Eigen::Vector3d adf_pose_gradient_clipped(const DescriptorSpec& spec,
                                          const Pose& pose,
                                          const SupportSpec& support,
                                          const Eigen::Vector2d& q) {
  const double r = support_radius(spec, support);
  if ((q - pose.position()).squaredNorm() > r * r) {
    return Eigen::Vector3d::Zero();
  }
  return adf_pose_gradient(spec, pose, q);
}

void rasterize_adf(const DescriptorSpec& spec, const Pose& pose,
                   const SupportSpec& support, ScalarField& target,
                   bool accumulate) {
  const double radius = support_radius(spec, support);
  for_each_cell_in_disc(target.spec, pose.position(), radius,
                        [&](int ix, int iy, const Eigen::Vector2d& q) {
                          const double v = adf_value(spec, pose, q);
                          if (accumulate) {
                            target.at(ix, iy) += v;
                          } else {
                            target.at(ix, iy) = v;
                          }
                        });
}

}  // namespace covsim
