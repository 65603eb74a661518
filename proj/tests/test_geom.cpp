#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ntnsim/geom.hpp"

using namespace ntnsim;
using namespace oracle;


TEST_CASE("cap area of the remote-area cap") {
  const SphericalCap cap({0, 0, 1}, kPi / 45.0, kEarthRadiusKm);
  CHECK(cap.half_angle() == doctest::Approx(kPi / 90.0));
  CHECK(cap_area(cap) == doctest::Approx(1.5536e5).epsilon(1e-3));
}

TEST_CASE("cap area matches rejection sampling") {
  std::mt19937_64 g(11);
  for (double apex : {kPi / 3.0, kPi / 2.0, kPi, 1.7 * kPi}) {
    const SphericalCap cap(normalized({1, 2, 3}), apex, 7000.0);
    constexpr int n = 400'000;
    int inside = 0;
    for (int i = 0; i < n; ++i) inside += cap.contains(random_direction(g)) ? 1 : 0;
    const double estimate = 4.0 * kPi * 7000.0 * 7000.0 * inside / n;
    CHECK(estimate == doctest::Approx(cap_area(cap)).epsilon(0.01));
  }
}

TEST_CASE("cap edge cases") {
  CHECK(cap_area(SphericalCap({0, 0, 1}, 0.0, 10.0)) == 0.0);
  CHECK(cap_area(SphericalCap({0, 0, 1}, 2.0 * kPi, 10.0)) == doctest::Approx(4.0 * kPi * 100.0));
  CHECK_THROWS(SphericalCap({0, 0, 1}, -0.1, 10.0));
  CHECK_THROWS(SphericalCap({0, 0, 1}, 2.0 * kPi + 0.1, 10.0));
  CHECK_THROWS(SphericalCap({0, 0, 1}, 1.0, 0.0));
  CHECK_THROWS(GeoPoint(0.0, {0, 0, 1}));
  CHECK_THROWS(GeoPoint(10.0, {0, 0, 0}));
}

TEST_CASE("slant range at zenith and at the horizon") {
  const GeoPoint user(kEarthRadiusKm, {0, 0, 1});
  CHECK(slant_range(user, GeoPoint(6921.0, {0, 0, 1})) == doctest::Approx(550.0));
  const double phi = max_visibility_angle(kEarthRadiusKm, 6921.0);
  CHECK(phi == doctest::Approx(0.4014).epsilon(1e-3));
  const GeoPoint horizon(6921.0, {std::sin(phi), 0, std::cos(phi)});
  CHECK(slant_range(user, horizon) == doctest::Approx(2703.8).epsilon(1e-4));
  CHECK(slant_range(user, horizon) == doctest::Approx(norm(horizon.position() - user.position())));
  CHECK_THROWS(max_visibility_angle(7000.0, 6371.0));
}

TEST_CASE("central angle") {
  CHECK(central_angle(Vec3{1, 0, 0}, Vec3{0, 1, 0}) == doctest::Approx(kPi / 2.0));
  CHECK(central_angle(Vec3{1, 0, 0}, Vec3{-1, 0, 0}) == doctest::Approx(kPi));
  CHECK(central_angle(Vec3{1, 0, 0}, Vec3{1, 0, 0}) == 0.0);
}

TEST_CASE("visibility equals the segment-sphere oracle on random pairs") {
  std::mt19937_64 g(2024);
  int disagreements = 0;
  int visible = 0;
  constexpr int cases = 10'000;
  for (int i = 0; i < cases; ++i) {
    const GeoPoint a(pick_radius(g), random_direction(g));
    // Keep half of the pairs close together so both outcomes are common.
    Vec3 dir = random_direction(g);
    if (i % 2 == 0) dir = normalized(a.direction() + 0.3 * random_direction(g));
    const GeoPoint b(pick_radius(g), dir);
    const bool oracle = min_distance_to_origin(a.position(), b.position()) >= kBlockingRadiusKm;
    const bool got = is_visible(a, b);
    disagreements += oracle != got ? 1 : 0;
    visible += got ? 1 : 0;
  }
  CHECK(disagreements == 0);
  CHECK(visible > cases / 10);
  CHECK(visible < cases * 9 / 10);
}

TEST_CASE("visibility is symmetric") {
  std::mt19937_64 g(5);
  for (int i = 0; i < 5000; ++i) {
    const GeoPoint a(pick_radius(g), random_direction(g));
    const GeoPoint b(pick_radius(g), normalized(a.direction() + 0.5 * random_direction(g)));
    REQUIRE(is_visible(a, b) == is_visible(b, a));
  }
}

TEST_CASE("surface observers follow the horizon rule") {
  std::mt19937_64 g(8);
  int checked = 0;
  for (int i = 0; i < 20'000; ++i) {
    const GeoPoint o(kEarthRadiusKm, random_direction(g));
    const GeoPoint p(pick_radius(g), normalized(o.direction() + 0.4 * random_direction(g)));
    const double margin = dot(o.position(), p.position()) - kEarthRadiusKm * kEarthRadiusKm;
    if (std::abs(margin) < 1.0) continue;
    ++checked;
    REQUIRE(is_visible(o, p) == (margin >= 0.0));
  }
  CHECK(checked > 19'000);
}

TEST_CASE("visibility boundary is inclusive and surface points see themselves") {
  const GeoPoint user(kEarthRadiusKm, {0, 0, 1});
  const double phi = max_visibility_angle(kEarthRadiusKm, 6921.0);
  CHECK(is_visible(user, GeoPoint(6921.0, {std::sin(phi * (1 - 1e-9)), 0, std::cos(phi * (1 - 1e-9))})));
  CHECK_FALSE(is_visible(user, GeoPoint(6921.0, {std::sin(phi * 1.001), 0, std::cos(phi * 1.001)})));
  CHECK(is_visible(user, user));
  const GeoPoint antipode(kEarthRadiusKm, {0, 0, -1});
  CHECK_FALSE(is_visible(user, antipode));
}

TEST_CASE("common line of sight needs both ends") {
  const GeoPoint a(kEarthRadiusKm, {0, 0, 1});
  const GeoPoint b(kEarthRadiusKm, offset_direction({0, 0, 1}, 500.0 / kEarthRadiusKm, 0.0));
  // 250 km behind a, so 750 km of arc from b: past the 20 km horizon of b.
  const GeoPoint behind_a(6391.0, offset_direction({0, 0, 1}, 250.0 / kEarthRadiusKm, kPi));
  const GeoPoint midway(6391.0, offset_direction({0, 0, 1}, 250.0 / kEarthRadiusKm, 0.0));
  CHECK(in_common_los(midway, a, b));
  CHECK_FALSE(in_common_los(behind_a, a, b));
  CHECK(in_common_los(behind_a, a, a));
}

TEST_CASE("session arc matches bisection on the orbit") {
  const double orbit = 6921.0;
  for (double offset : {0.0, 0.1, 0.2, 0.35}) {
    const Vec3 user_dir{std::cos(offset), 0.0, std::sin(offset)};
    const GeoPoint user(kEarthRadiusKm, user_dir);
    double lo = 0.0, hi = kPi / 2.0;
    for (int i = 0; i < 100; ++i) {
      const double mid = 0.5 * (lo + hi);
      const GeoPoint sat(orbit, {std::cos(mid), std::sin(mid), 0.0});
      (dot(sat.position(), user.position()) >= kEarthRadiusKm * kEarthRadiusKm ? lo : hi) = mid;
    }
    CHECK(session_arc_half_angle(orbit, kEarthRadiusKm, offset) == doctest::Approx(lo).epsilon(1e-9));
  }
  CHECK(session_arc_half_angle(orbit, kEarthRadiusKm, 0.2) == doctest::Approx(0.3518).epsilon(2e-3));
  CHECK(session_arc_half_angle(orbit, kEarthRadiusKm, 0.45) == 0.0);
  CHECK_THROWS(session_arc_half_angle(6000.0, kEarthRadiusKm, 0.1));
  CHECK_THROWS(session_arc_half_angle(orbit, kEarthRadiusKm, -0.1));
}

TEST_CASE("local frame is orthonormal, including at the poles") {
  for (Vec3 up : {Vec3{0, 0, 1}, Vec3{0, 0, -1}, normalized({1, 2, 3})}) {
    const LocalFrame f = local_frame(up);
    CHECK(norm(f.east) == doctest::Approx(1.0));
    CHECK(norm(f.north) == doctest::Approx(1.0));
    CHECK(dot(f.east, f.north) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dot(f.east, f.up) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(dot(f.north, f.up) == doctest::Approx(0.0).epsilon(1e-12));
  }
  const Vec3 d = offset_direction({0, 0, 1}, 0.3, 1.0);
  CHECK(central_angle(d, Vec3{0, 0, 1}) == doctest::Approx(0.3));
}
