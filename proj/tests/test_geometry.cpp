#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "udn/geometry.hpp"

using namespace udn;

namespace {

// Index of the center triangle (0..5) a point falls into, by polar angle.
int sector_of(const Point2D& p) {
  double deg = std::atan2(p.y, p.x) * 180.0 / std::numbers::pi;
  // Triangles span vertex to vertex: [30,90), [90,150), ...
  deg = std::fmod(deg - 30.0 + 720.0, 360.0);
  return static_cast<int>(deg / 60.0) % 6;
}

}  // namespace

TEST_CASE("hex_contains boundary and exterior") {
  const MacrocellRegion region{1000.0, {0.0, 0.0}};
  CHECK(hex_contains({0.0, 0.0}, region));
  CHECK(hex_contains(region.vertex(90.0), region));
  CHECK(hex_contains(region.vertex(330.0), region));
  CHECK_FALSE(hex_contains({0.0, 1001.0}, region));
  // Edge midpoint sits at the apothem R*sqrt(3)/2.
  CHECK(hex_contains({0.5 * std::numbers::sqrt3 * 1000.0, 0.0}, region));
  CHECK_FALSE(hex_contains({0.5 * std::numbers::sqrt3 * 1000.0 + 1.0, 0.0}, region));
  CHECK_FALSE(hex_contains({NAN, 0.0}, region));

  const MacrocellRegion shifted{10.0, {500.0, -20.0}};
  CHECK(hex_contains({500.0, -10.0}, shifted));
  CHECK_FALSE(hex_contains({0.0, 0.0}, shifted));
}

TEST_CASE("region area") {
  const MacrocellRegion region{1000.0, {}};
  CHECK(region.area() == doctest::Approx(1.5 * std::sqrt(3.0) * 1e6));
}

TEST_CASE("uniform sampling") {
  const MacrocellRegion region{1000.0, {0.0, 0.0}};
  Rng rng(42);
  CHECK(sample_bs_positions(0, region, {}, rng).empty());

  SUBCASE("every point inside and chi-square over the six triangles") {
    const std::size_t n = 10000;
    const auto pts = sample_bs_positions(n, region, {}, rng);
    REQUIRE(pts.size() == n);
    std::array<double, 6> counts{};
    for (const auto& p : pts) {
      CHECK(hex_contains(p, region));
      counts[static_cast<std::size_t>(sector_of(p))] += 1.0;
    }
    const double expected = static_cast<double>(n) / 6.0;
    double chi2 = 0.0;
    for (const double c : counts) chi2 += (c - expected) * (c - expected) / expected;
    // 99th percentile of chi-square with 5 degrees of freedom.
    CHECK(chi2 < 15.086);
  }
}

TEST_CASE("sampling is deterministic per seed") {
  const MacrocellRegion region{1000.0, {}};
  PlacementPolicy hard{PlacementMode::kHardcore, 150.0, 10000};
  for (const auto& policy : {PlacementPolicy{}, hard}) {
    Rng a(99), b(99), c(100);
    const auto pa = sample_bs_positions(30, region, policy, a);
    CHECK(pa == sample_bs_positions(30, region, policy, b));
    CHECK_FALSE(pa == sample_bs_positions(30, region, policy, c));
  }
}

TEST_CASE("hardcore sampling keeps separation") {
  const MacrocellRegion region{1000.0, {}};
  const PlacementPolicy policy{PlacementMode::kHardcore, 200.0, 10000};
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const auto pts = sample_bs_positions(25, region, policy, rng);
    REQUIRE(pts.size() == 25);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(hex_contains(pts[i], region));
      for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(distance(pts[i], pts[j]) >= 200.0);
    }
  }
}

TEST_CASE("hardcore sampling reports infeasibility") {
  // Disc packing allows roughly 17 points at 400 m separation in this region.
  const MacrocellRegion region{1000.0, {}};
  const PlacementPolicy policy{PlacementMode::kHardcore, 400.0, 10000};
  Rng rng(3);
  try {
    sample_bs_positions(50, region, policy, rng);
    FAIL("expected PlacementInfeasible");
  } catch (const PlacementInfeasible& e) {
    CHECK(e.placed() < 50);
    CHECK(e.placed() > 5);
    CHECK(std::string(e.what()).find("placement infeasible") != std::string::npos);
  }
}

TEST_CASE("gateway placement") {
  const MacrocellRegion region{1000.0, {0.0, 0.0}};
  const auto top = place_gateways({GatewayMode::kTopVertices, {}}, region);
  REQUIRE(top.size() == 3);
  CHECK(top[0].x == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(top[0].y == doctest::Approx(1000.0));
  CHECK(top[1].x == doctest::Approx(-866.0254).epsilon(1e-7));
  CHECK(top[1].y == doctest::Approx(-500.0));
  CHECK(top[2].x == doctest::Approx(866.0254).epsilon(1e-7));
  CHECK(top[2].y == doctest::Approx(-500.0));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(distance(top[i], region.center) == doctest::Approx(1000.0));
    CHECK(distance(top[i], top[(i + 1) % 3]) == doctest::Approx(1000.0 * std::sqrt(3.0)));
  }

  const auto single = place_gateways({GatewayMode::kSingleCenter, {}}, region);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == Point2D{0.0, 0.0});

  const std::vector<Point2D> inside{{100.0, 200.0}, {0.0, -999.0}};
  CHECK(place_gateways({GatewayMode::kExplicit, inside}, region) == inside);
  CHECK_THROWS_AS(place_gateways({GatewayMode::kExplicit, {{0.0, 2000.0}}}, region),
                  GatewayOutsideRegion);
}
