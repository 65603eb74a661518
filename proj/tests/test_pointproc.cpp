#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "oracles.hpp"
#include "ntnsim/geom.hpp"
#include "ntnsim/pointproc.hpp"

using namespace ntnsim;
using namespace oracle;


TEST_CASE("BPP on a sphere has uniform z") {
  const double r = 6921.0;
  const Constellation c = sample_bpp_sphere(20'000, r, StreamFamily(3, "tier.sat"));
  std::vector<double> z;
  for (const Platform& p : c) {
    REQUIRE(p.position.radius() == doctest::Approx(r));
    z.push_back(p.position.position().z);
  }
  const double d = ks_statistic(z, [r](double v) { return (v + r) / (2.0 * r); });
  CHECK(d < ks_critical_001(z.size()));
}

TEST_CASE("BPP on a cap stays inside and has uniform 1 - cos(theta)") {
  const SphericalCap cap(normalized({1, 1, 1}), kPi / 45.0, 6391.0);
  const Constellation c = sample_bpp_cap(20'000, cap, StreamFamily(4, "tier.hap"));
  const double depth = 1.0 - std::cos(cap.half_angle());
  std::vector<double> t;
  for (const Platform& p : c) {
    REQUIRE(cap.contains(p.position.direction()));
    REQUIRE(p.position.radius() == doctest::Approx(6391.0));
    t.push_back(1.0 - dot(p.position.direction(), cap.center()));
  }
  const double d = ks_statistic(t, [depth](double v) { return std::clamp(v / depth, 0.0, 1.0); });
  CHECK(d < ks_critical_001(t.size()));
}

TEST_CASE("PPP counts on a cap are Poisson") {
  const SphericalCap cap({0, 0, 1}, kPi / 45.0, kEarthRadiusKm);
  const double density = 40.0 / cap_area(cap);
  std::vector<double> counts;
  for (std::uint64_t t = 0; t < 20'000; ++t) {
    counts.push_back(static_cast<double>(sample_ppp_cap(density, cap, StreamFamily(5, "tier.hap", t)).size()));
  }
  const double fano = fano_factor(counts);
  CHECK(fano >= 0.95);
  CHECK(fano <= 1.05);
}

TEST_CASE("PPP counts on a disk are Poisson") {
  const DiskRegion disk{{0, 0, 1}, 2.0};
  const double density = 25.0 / (kPi * 4.0);
  std::vector<double> counts;
  for (std::uint64_t t = 0; t < 20'000; ++t) {
    counts.push_back(static_cast<double>(sample_ppp_disk(density, disk, 80.0, StreamFamily(6, "tier.lap", t)).size()));
  }
  const double fano = fano_factor(counts);
  CHECK(fano >= 0.95);
  CHECK(fano <= 1.05);
}

TEST_CASE("mean counts of the reference regions") {
  // 100 users per km^2 over the 30 km disaster disk: about 2.827e5 points.
  const DiskRegion disk{{0, 0, 1}, 30.0};
  const double expected_disk = 100.0 * kPi * 900.0;
  CHECK(expected_disk == doctest::Approx(2.827e5).epsilon(1e-3));
  const auto n_disk = static_cast<double>(sample_ppp_disk(100.0, disk, 0.0, StreamFamily(7, "u")).size());
  CHECK(std::abs(n_disk - expected_disk) < 5.0 * std::sqrt(expected_disk));

  // One user per km^2 over the remote-area cap: about 1.5536e5 points.
  const SphericalCap cap({0, 0, 1}, kPi / 45.0, kEarthRadiusKm);
  const double expected_cap = cap_area(cap);
  const auto n_cap = static_cast<double>(sample_ppp_cap(1.0, cap, StreamFamily(8, "u")).size());
  CHECK(std::abs(n_cap - expected_cap) < 5.0 * std::sqrt(expected_cap));
}

TEST_CASE("disk points lie on the lifted tangent plane") {
  const Vec3 center = normalized({0.2, -0.4, 1.0});
  const DiskRegion disk{center, 30.0};
  const Constellation c = sample_bpp_disk(5000, disk, 80.0, StreamFamily(9, "tier.lap"));
  const LocalFrame f = local_frame(center);
  std::vector<double> r2;
  for (const Platform& p : c) {
    const Vec3 rel = p.position.position() - (kEarthRadiusKm + 0.08) * center;
    REQUIRE(dot(rel, f.up) == doctest::Approx(0.0).epsilon(1e-9));
    const double r = norm(rel);
    REQUIRE(r <= 30.0 + 1e-9);
    r2.push_back(r * r);
  }
  // Uniform on a disk means r^2 is uniform on [0, R^2].
  const double d = ks_statistic(r2, [](double v) { return std::clamp(v / 900.0, 0.0, 1.0); });
  CHECK(d < ks_critical_001(r2.size()));
}

TEST_CASE("realizations are nested in the point count") {
  const StreamFamily fam(10, "tier.sat", 3);
  const Constellation small = sample_bpp_sphere(10, 6921.0, fam);
  const Constellation large = sample_bpp_sphere(25, 6921.0, fam);
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i].position == large[i].position);
  for (std::size_t i = 0; i < large.size(); ++i) CHECK(large[i].id == static_cast<int>(i));
  CHECK(sample_bpp_sphere(0, 6921.0, fam).empty());
}

TEST_CASE("Cox orbits: Poisson planes, points on their planes, altitudes in range") {
  double planes = 0.0, sats = 0.0;
  constexpr int trials = 4000;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const CoxRealization r = sample_cox_orbits(6.0, 11.0, {500.0, 1200.0}, StreamFamily(11, "tier.sat", t));
    planes += static_cast<double>(r.planes.size());
    sats += static_cast<double>(r.satellites.size());
    for (const OrbitPlane& p : r.planes) {
      REQUIRE(p.radius_km >= kEarthRadiusKm + 500.0);
      REQUIRE(p.radius_km <= kEarthRadiusKm + 1200.0);
      REQUIRE(p.inclination >= 0.0);
      REQUIRE(p.inclination < kPi);
    }
    for (const Platform& s : r.satellites) {
      const double alt = s.position.radius() - kEarthRadiusKm;
      REQUIRE(alt >= 500.0 - 1e-9);
      REQUIRE(alt <= 1200.0 + 1e-9);
    }
  }
  CHECK(planes / trials == doctest::Approx(6.0).epsilon(0.03));
  CHECK(sats / trials == doctest::Approx(66.0).epsilon(0.03));
  CHECK_THROWS(sample_cox_orbits(6.0, 11.0, {100.0, 1200.0}, StreamFamily(1, "x")));
  CHECK_THROWS(sample_cox_orbits(6.0, 11.0, {900.0, 800.0}, StreamFamily(1, "x")));
}

TEST_CASE("deterministic orbit model") {
  std::vector<OrbitPlane> planes;
  for (int j = 0; j < 6; ++j) planes.push_back({0.9, 2.0 * kPi * j / 6.0, 6921.0});
  const Constellation c = sample_orbit_model(planes, 11, StreamFamily(12, "tier.sat"));
  CHECK(c.size() == 66);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const OrbitPlane& p = planes[i / 11];
    const Vec3 normal{std::sin(p.ascending_node) * std::sin(p.inclination),
                      -std::cos(p.ascending_node) * std::sin(p.inclination), std::cos(p.inclination)};
    CHECK(c[i].position.radius() == doctest::Approx(6921.0));
    CHECK(dot(c[i].position.direction(), normal) == doctest::Approx(0.0).epsilon(1e-9));
  }
  CHECK_THROWS(sample_orbit_model({}, 3, StreamFamily(1, "x")));
}

TEST_CASE("orbit position starts at the ascending node") {
  const OrbitPlane p{0.5, 1.2, 7000.0};
  const Vec3 node = orbit_position(p, 0.0);
  CHECK(node.z == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::atan2(node.y, node.x) == doctest::Approx(1.2));
  CHECK(orbit_position(p, kPi / 2.0).z == doctest::Approx(7000.0 * std::sin(0.5)));
}
