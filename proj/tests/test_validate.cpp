#include <doctest.h>

#include <sstream>

#include "udn/validate.hpp"

using namespace udn;

TEST_CASE("validation passes on the real scheduler") {
  ValidationOptions opt;
  opt.seeds = 40;
  const auto report = run_validation(opt);
  CHECK(report.passed());
  CHECK(report.instances == 120);
  CHECK(report.oracle_compared > 0);
  std::ostringstream os;
  print_report(os, report);
  CHECK(os.str().find("all checks passed") != std::string::npos);
}

TEST_CASE("validation catches a broken conflict check") {
  ValidationOptions opt;
  opt.seeds = 40;
  opt.conflict = [](const BackhaulLink&, const BackhaulLink&, const NetworkTopology&) { return false; };
  const auto report = run_validation(opt);
  CHECK_FALSE(report.passed());
  CHECK(report.violation_count > 0);
}

TEST_CASE("validation catches a missing exclusion margin") {
  ValidationOptions opt;
  opt.seeds = 60;
  // Honors shared nodes but uses r instead of (1+delta)r.
  opt.conflict = [](const BackhaulLink& a, const BackhaulLink& b, const NetworkTopology& t) {
    NetworkTopology loose = t;
    loose.exclusion_factor = 0.0;
    return links_conflict(a, b, loose);
  };
  CHECK_FALSE(run_validation(opt).passed());
}

TEST_CASE("check_routes flags a tampered table") {
  NetworkTopology t;
  t.bs_positions = {{280.0, 0.0}, {190.0, 0.0}, {100.0, 0.0}};
  t.gateway_positions = {{0.0, 0.0}};
  auto routes = build_routes(t);
  CHECK(check_routes(t, routes).empty());
  routes.entries[0].hop_count = 2;
  CHECK_FALSE(check_routes(t, routes).empty());
  routes = build_routes(t);
  routes.entries[0].next_hop = RelayVia{2};  // 180 m hop
  CHECK_FALSE(check_routes(t, routes).empty());
}

TEST_CASE("min_hops_bfs") {
  NetworkTopology t;
  t.bs_positions = {{280.0, 0.0}, {190.0, 0.0}, {100.0, 0.0}, {900.0, 0.0}};
  t.gateway_positions = {{0.0, 0.0}};
  CHECK(min_hops_bfs(t, 0) == 3);
  CHECK(min_hops_bfs(t, 2) == 1);
  CHECK_FALSE(min_hops_bfs(t, 3).has_value());
}
