#include "covsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace covsim {

namespace {

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

}  // namespace

void validate_obstacle(const ConvexObstacle& obstacle) {
  const auto& v = obstacle.vertices;
  if (v.size() < 3) {
    throw std::invalid_argument("obstacle: needs at least 3 vertices");
  }
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!v[i].allFinite()) {
      throw std::invalid_argument("obstacle: non-finite vertex");
    }
    const Eigen::Vector2d e0 = v[(i + 1) % n] - v[i];
    const Eigen::Vector2d e1 = v[(i + 2) % n] - v[(i + 1) % n];
    if (!(cross2(e0, e1) > 0.0)) {
      std::ostringstream msg;
      msg << "obstacle: not strictly convex CCW at vertex " << (i + 1) % n;
      throw std::invalid_argument(msg.str());
    }
  }
}

bool obstacle_contains(const ConvexObstacle& obstacle,
                       const Eigen::Vector2d& p) {
  const auto& v = obstacle.vertices;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross2(v[(i + 1) % n] - v[i], p - v[i]) < 0.0) return false;
  }
  return true;
}

Eigen::Vector2d closest_point(const ConvexObstacle& obstacle,
                              const Eigen::Vector2d& p) {
  if (obstacle_contains(obstacle, p)) {
    throw SafetyViolation("closest_point: point inside or on obstacle");
  }
  const auto& v = obstacle.vertices;
  const std::size_t n = v.size();
  Eigen::Vector2d best = v[0];
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d a = v[i];
    const Eigen::Vector2d ab = v[(i + 1) % n] - a;
    const double t =
        std::clamp(ab.dot(p - a) / ab.squaredNorm(), 0.0, 1.0);
    const Eigen::Vector2d cand = a + t * ab;
    const double d2 = (p - cand).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best = cand;
    }
  }
  return best;
}

double avoidance_l(double x, const SafetyParams& sp) {
  if (x <= sp.r) {
    std::ostringstream msg;
    msg << "avoidance: distance " << x << " at or below safety threshold "
        << sp.r;
    throw SafetyViolation(msg.str());
  }
  if (x >= sp.R) return 0.0;
  const double num = x * x - sp.R * sp.R;
  const double den = x * x - sp.r * sp.r;
  const double ratio = std::min(0.0, num / den);
  return ratio * ratio;
}

double avoidance_dl(double x, const SafetyParams& sp) {
  if (x <= sp.r) {
    std::ostringstream msg;
    msg << "avoidance: distance " << x << " at or below safety threshold "
        << sp.r;
    throw SafetyViolation(msg.str());
  }
  if (x > sp.R) return 0.0;
  const double den = x * x - sp.r * sp.r;
  return 4.0 * (sp.R * sp.R - sp.r * sp.r) * (x * x - sp.R * sp.R) * x /
         (den * den * den);
}

double avoidance_total(std::span<const Pose> poses,
                       std::span<const ConvexObstacle> obstacles,
                       const SafetyParams& sp) {
  double total = 0.0;
  const std::size_t n = poses.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d pi = poses[i].position();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      total += avoidance_l((pi - poses[j].position()).norm(), sp);
    }
    for (const auto& obs : obstacles) {
      if (obstacle_contains(obs, pi)) {
        throw SafetyViolation("avoidance: agent inside obstacle");
      }
      total += avoidance_l((pi - closest_point(obs, pi)).norm(), sp);
    }
  }
  return total;
}

Eigen::Vector3d avoidance_gradient(std::size_t i, std::span<const Pose> poses,
                                   std::span<const ConvexObstacle> obstacles,
                                   const SafetyParams& sp) {
  Eigen::Vector3d grad = Eigen::Vector3d::Zero();
  const Eigen::Vector2d pi = poses[i].position();

  for (std::size_t j = 0; j < poses.size(); ++j) {
    if (j == i) continue;
    const Eigen::Vector2d diff = pi - poses[j].position();
    const double rho = diff.norm();
    if (rho <= sp.r) {
      std::ostringstream msg;
      msg << "avoidance: agents " << i << " and " << j << " at distance "
          << rho << " <= r = " << sp.r;
      throw SafetyViolation(msg.str());
    }
    if (rho > sp.R) continue;
    // the pair (i, j) appears in both v_i and v_j, hence the factor 2
    grad.head<2>() += 2.0 * avoidance_dl(rho, sp) * diff / rho;
  }

  for (std::size_t k = 0; k < obstacles.size(); ++k) {
    if (obstacle_contains(obstacles[k], pi)) {
      std::ostringstream msg;
      msg << "avoidance: agent " << i << " inside obstacle " << k;
      throw SafetyViolation(msg.str());
    }
    const Eigen::Vector2d diff = pi - closest_point(obstacles[k], pi);
    const double rho = diff.norm();
    if (rho <= sp.r) {
      std::ostringstream msg;
      msg << "avoidance: agent " << i << " at distance " << rho
          << " <= r = " << sp.r << " from obstacle " << k;
      throw SafetyViolation(msg.str());
    }
    if (rho > sp.R) continue;
    grad.head<2>() += avoidance_dl(rho, sp) * diff / rho;
  }
  return grad;
}

std::pair<double, double> min_distances(
    std::span<const Pose> poses, std::span<const ConvexObstacle> obstacles) {
  double min_agents = std::numeric_limits<double>::infinity();
  double min_obstacles = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poses.size(); ++i) {
    const Eigen::Vector2d pi = poses[i].position();
    for (std::size_t j = i + 1; j < poses.size(); ++j) {
      min_agents =
          std::min(min_agents, (pi - poses[j].position()).norm());
    }
    for (const auto& obs : obstacles) {
      if (obstacle_contains(obs, pi)) {
        min_obstacles = 0.0;
        continue;
      }
      min_obstacles =
          std::min(min_obstacles, (pi - closest_point(obs, pi)).norm());
    }
  }
  return {min_agents, min_obstacles};
}

std::vector<ConvexObstacle> make_virtual_walls(const GridSpec& grid,
                                               double thickness) {
  const double x0 = grid.ox, x1 = grid.ox + grid.width;
  const double y0 = grid.oy, y1 = grid.oy + grid.height;
  const double t = thickness;
  auto rect = [](double ax, double bx, double ay, double by) {
    return ConvexObstacle{{{ax, ay}, {bx, ay}, {bx, by}, {ax, by}}};
  };
  return {
      rect(x0 - t, x1 + t, y0 - t, y0),  // bottom
      rect(x0 - t, x1 + t, y1, y1 + t),  // top
      rect(x0 - t, x0, y0, y1),          // left
      rect(x1, x1 + t, y0, y1),          // right
  };
}

}  // namespace covsim
