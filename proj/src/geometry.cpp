#include "udn/geometry.hpp"

#include <numbers>

namespace udn {

namespace {

constexpr double kBoundaryTolerance = 1e-9;

}  // namespace

PlacementInfeasible::PlacementInfeasible(std::size_t placed, std::size_t requested)
    : std::runtime_error("placement infeasible: placed " + std::to_string(placed) + " of " +
                         std::to_string(requested) + " points"),
      placed_(placed) {}

Point2D MacrocellRegion::vertex(double angle_deg) const {
  const double rad = angle_deg * std::numbers::pi / 180.0;
  return {center.x + circumradius * std::cos(rad), center.y + circumradius * std::sin(rad)};
}

bool hex_contains(const Point2D& p, const MacrocellRegion& region) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) return false;
  const double radius = region.circumradius;
  const double tol = kBoundaryTolerance * radius;
  const double dx = std::abs(p.x - region.center.x);
  const double dy = std::abs(p.y - region.center.y);
  // Vertical edges at |x| = R*sqrt(3)/2, slanted edges satisfy |y| + |x|/sqrt(3) = R.
  if (dx > 0.5 * std::numbers::sqrt3 * radius + tol) return false;
  return dy + dx / std::numbers::sqrt3 <= radius + tol;
}

std::vector<Point2D> sample_bs_positions(std::size_t n, const MacrocellRegion& region,
                                         const PlacementPolicy& policy, Rng& rng) {
  std::vector<Point2D> points;
  points.reserve(n);
  const double half_width = 0.5 * std::numbers::sqrt3 * region.circumradius;
  const double half_height = region.circumradius;

  // Rejection from the bounding box; acceptance ratio is 3/4.
  auto draw = [&] {
    for (;;) {
      Point2D p{region.center.x + rng.uniform(-half_width, half_width),
                region.center.y + rng.uniform(-half_height, half_height)};
      if (hex_contains(p, region)) return p;
    }
  };

  if (policy.mode == PlacementMode::kUniform) {
    for (std::size_t i = 0; i < n; ++i) points.push_back(draw());
    return points;
  }

  std::size_t consecutive_rejections = 0;
  while (points.size() < n) {
    const Point2D candidate = draw();
    bool ok = true;
    for (const auto& q : points) {
      if (distance(candidate, q) < policy.min_separation) {
        ok = false;
        break;
      }
    }
    if (ok) {
      points.push_back(candidate);
      consecutive_rejections = 0;
    } else if (++consecutive_rejections >= policy.max_rejections) {
      throw PlacementInfeasible(points.size(), n);
    }
  }
  return points;
}

std::vector<Point2D> place_gateways(const GatewayConfig& config, const MacrocellRegion& region) {
  switch (config.mode) {
    case GatewayMode::kSingleCenter:
      return {region.center};
    case GatewayMode::kTopVertices:
      return {region.vertex(90.0), region.vertex(210.0), region.vertex(330.0)};
    case GatewayMode::kExplicit:
      break;
  }
  if (config.explicit_positions.empty()) {
    throw GatewayOutsideRegion("explicit gateway list is empty");
  }
  for (const auto& p : config.explicit_positions) {
    if (!hex_contains(p, region)) {
      throw GatewayOutsideRegion("gateway outside region at (" + std::to_string(p.x) + ", " +
                                 std::to_string(p.y) + ")");
    }
  }
  return config.explicit_positions;
}

}  // namespace udn
