#pragma once

// Seeded samplers for platform and user point processes.
//
// Point i of a sampler call draws only from `streams.at(i)`, so a realization
// with n points is a prefix of the realization with n + 1 points under the same
// streams. Poisson counts come from the family's reserved count entity.

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "ntnsim/geom.hpp"
#include "ntnsim/kernels.hpp"
#include "ntnsim/rng.hpp"

namespace ntnsim {

enum class Tier : std::uint8_t { lap = 0, hap = 1, sat = 2 };
inline constexpr std::array<Tier, 3> kAllTiers{Tier::lap, Tier::hap, Tier::sat};

std::string_view tier_name(Tier t);

template <typename T>
using TierTable = std::array<T, 3>;

template <typename T>
constexpr const T& at(const TierTable<T>& table, Tier t) {
  return table[static_cast<std::size_t>(t)];
}
template <typename T>
constexpr T& at(TierTable<T>& table, Tier t) {
  return table[static_cast<std::size_t>(t)];
}

struct Platform {
  int id = 0;
  Tier tier = Tier::sat;
  std::uint32_t index = 0;  // position within its tier's realization
  GeoPoint position;
};

// One sampled realization. Ids are dense 0..n-1 in insertion order. Radio
// parameters are attached per tier by the deployment that owns the realization.
class Constellation {
 public:
  const Platform& add(Tier tier, std::uint32_t index, const GeoPoint& position);
  void append(const Constellation& other);

  std::size_t size() const { return platforms_.size(); }
  bool empty() const { return platforms_.empty(); }
  const Platform& operator[](std::size_t i) const { return platforms_[i]; }
  auto begin() const { return platforms_.begin(); }
  auto end() const { return platforms_.end(); }

  kernels::PointsSoA positions() const;

 private:
  std::vector<Platform> platforms_;
};

struct OrbitPlane {
  double inclination = 0.0;     // [0, pi]
  double ascending_node = 0.0;  // [0, 2pi)
  double radius_km = kEarthRadiusKm + 550.0;

  void validate() const;
};

// Position on a circular orbit at argument of latitude `u`.
Vec3 orbit_position(const OrbitPlane& plane, double u);

struct DiskRegion {
  Vec3 center{0.0, 0.0, 1.0};  // tangent point direction on the Earth surface
  double radius_km = 30.0;
};

Constellation sample_bpp_sphere(std::size_t n, double radius_km, const StreamFamily& streams, Tier tier = Tier::sat);
Constellation sample_bpp_cap(std::size_t n, const SphericalCap& cap, const StreamFamily& streams, Tier tier = Tier::hap);
Constellation sample_ppp_cap(double density_per_km2, const SphericalCap& cap, const StreamFamily& streams,
                             Tier tier = Tier::hap);

// Planar disk on the tangent plane at `disk.center`, lifted by `altitude_m`.
Constellation sample_bpp_disk(std::size_t n, const DiskRegion& disk, double altitude_m, const StreamFamily& streams,
                              Tier tier = Tier::lap);
Constellation sample_ppp_disk(double density_per_km2, const DiskRegion& disk, double altitude_m,
                              const StreamFamily& streams, Tier tier = Tier::lap);

struct CoxRealization {
  std::vector<OrbitPlane> planes;
  Constellation satellites;
};

// Orbit planes from a Poisson process on the cuboid
// [0, 2pi) x [0, pi) x [alt_min, alt_max] (node, inclination, altitude), then a
// Poisson number of satellites per plane at uniform argument of latitude.
CoxRealization sample_cox_orbits(double orbit_rate, double sats_per_orbit_mean,
                                 std::pair<double, double> altitude_range_km, const StreamFamily& streams);

// Deterministic planes, each carrying `sats_per_plane` satellites at uniform
// argument of latitude.
Constellation sample_orbit_model(const std::vector<OrbitPlane>& planes, std::size_t sats_per_plane,
                                 const StreamFamily& streams);

// Single uniform point on a cap / disk, used for typical-user placement.
GeoPoint uniform_on_cap(const SphericalCap& cap, CounterRng& rng);
GeoPoint uniform_on_disk(const DiskRegion& disk, double altitude_m, CounterRng& rng);

}  // namespace ntnsim
