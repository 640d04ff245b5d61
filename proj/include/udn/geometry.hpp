#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "udn/random.hpp"

namespace udn {

/// Position in the macrocell plane, meters.
struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline double distance(const Point2D& a, const Point2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Regular hexagon with one vertex pointing straight up. Vertices sit at
/// 30, 90, 150, 210, 270 and 330 degrees from the center, `circumradius`
/// meters away.
struct MacrocellRegion {
  double circumradius = 1000.0;
  Point2D center{};

  double area() const { return 1.5 * std::sqrt(3.0) * circumradius * circumradius; }
  Point2D vertex(double angle_deg) const;
};

enum class PlacementMode { kUniform, kHardcore };

struct PlacementPolicy {
  PlacementMode mode = PlacementMode::kUniform;
  double min_separation = 0.0;  // hardcore only
  std::size_t max_rejections = 10000;
};

enum class GatewayMode { kSingleCenter, kTopVertices, kExplicit };

struct GatewayConfig {
  GatewayMode mode = GatewayMode::kTopVertices;
  std::vector<Point2D> explicit_positions;
};

class PlacementInfeasible : public std::runtime_error {
 public:
  PlacementInfeasible(std::size_t placed, std::size_t requested);
  std::size_t placed() const { return placed_; }

 private:
  std::size_t placed_;
};

class GatewayOutsideRegion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed hexagon test; points on the boundary count as inside.
bool hex_contains(const Point2D& p, const MacrocellRegion& region);

/// Draws exactly `n` positions inside the hexagon. Uniform mode is a Poisson
/// process conditioned on its count; hardcore mode rejects candidates closer
/// than `min_separation` to an already placed point and throws
/// PlacementInfeasible after `max_rejections` consecutive rejections.
std::vector<Point2D> sample_bs_positions(std::size_t n, const MacrocellRegion& region,
                                         const PlacementPolicy& policy, Rng& rng);

std::vector<Point2D> place_gateways(const GatewayConfig& config, const MacrocellRegion& region);

}  // namespace udn
