#pragma once

#include <Eigen/Dense>

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "covsim/descriptor.hpp"
#include "covsim/grid.hpp"

namespace covsim {

/// Raised when a distance at or below the safety threshold is encountered.
/// The simulation treats this as a hard abort.
class SafetyViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strictly convex polygon, vertices in counter-clockwise order.
struct ConvexObstacle {
  std::vector<Eigen::Vector2d> vertices;
};

/// Throws std::invalid_argument with the reason when the polygon is not a
/// strictly convex CCW polygon with at least three vertices.
void validate_obstacle(const ConvexObstacle& obstacle);

/// True when p lies inside the polygon or on its boundary.
bool obstacle_contains(const ConvexObstacle& obstacle,
                       const Eigen::Vector2d& p);

/// Closest boundary point to an exterior point p (unique by convexity).
/// Throws SafetyViolation when p is inside or on the boundary.
Eigen::Vector2d closest_point(const ConvexObstacle& obstacle,
                              const Eigen::Vector2d& p);

struct SafetyParams {
  double r = 0.0;  // safety threshold
  double R = 0.0;  // detection range, > r
};

/// Avoidance barrier (min{0, (x^2-R^2)/(x^2-r^2)})^2: zero for x >= R,
/// unbounded as x -> r+. Throws SafetyViolation for x <= r.
double avoidance_l(double x, const SafetyParams& sp);

/// dl/dx: zero for x > R, 4 (R^2-r^2)(x^2-R^2) x / (x^2-r^2)^3 on (r, R].
double avoidance_dl(double x, const SafetyParams& sp);

/// Total avoidance function over a deployment: sum of l over all ordered
/// agent pairs and all (agent, obstacle) pairs.
double avoidance_total(std::span<const Pose> poses,
                       std::span<const ConvexObstacle> obstacles,
                       const SafetyParams& sp);

/// Gradient of the total avoidance function with respect to pose i.
/// Only agents and obstacles within the detection range contribute; the
/// heading component is always zero.
Eigen::Vector3d avoidance_gradient(std::size_t i, std::span<const Pose> poses,
                                   std::span<const ConvexObstacle> obstacles,
                                   const SafetyParams& sp);

/// (min inter-agent distance, min agent-obstacle distance); +infinity for
/// empty sets. An agent inside an obstacle yields distance zero.
std::pair<double, double> min_distances(
    std::span<const Pose> poses, std::span<const ConvexObstacle> obstacles);

/// Four thin rectangles flush with the outside of the grid boundary,
/// sealing the domain for the obstacle-avoidance machinery.
std::vector<ConvexObstacle> make_virtual_walls(const GridSpec& grid,
                                               double thickness = 1.0);

}  // namespace covsim
