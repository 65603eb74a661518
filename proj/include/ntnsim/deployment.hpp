#pragma once

// A deployment describes how one Monte-Carlo trial is drawn: a reference user,
// an optional ground base station, and one point process per platform tier.

#include <cstdint>
#include <optional>
#include <vector>

#include "ntnsim/channel.hpp"
#include "ntnsim/geom.hpp"
#include "ntnsim/pointproc.hpp"

namespace ntnsim {

enum class ProcessKind { none, fixed, bpp_sphere, bpp_cap, ppp_cap, bpp_disk, ppp_disk, cox, orbit };

struct TierProcess {
  Tier tier = Tier::sat;
  ProcessKind kind = ProcessKind::none;
  std::size_t count = 0;        // BPP point count; satellites per plane for `orbit`
  double density_per_km2 = 0.0;  // PPP intensity
  double radius_km = kEarthRadiusKm;  // sphere/cap radius
  double apex_angle = 0.0;       // cap apex angle, cap centered on the site
  double disk_radius_km = 0.0;
  double altitude_m = 0.0;       // disk processes
  double orbit_rate = 0.0;       // Cox: mean number of planes
  double sats_per_orbit = 0.0;   // Cox: mean satellites per plane
  double altitude_min_km = 550.0;
  double altitude_max_km = 550.0;
  std::vector<OrbitPlane> planes;
  std::vector<GeoPoint> fixed_points;
};

enum class UserKind { fixed, cap, disk };

struct UserProcess {
  UserKind kind = UserKind::fixed;
  GeoPoint fixed;
  double apex_angle = 0.0;  // cap on the Earth surface centered on the site
  double disk_radius_km = 0.0;
};

struct Deployment {
  Vec3 site{0.0, 0.0, 1.0};  // center of the user region
  UserProcess users;
  std::optional<GeoPoint> base_station;
  std::vector<TierProcess> tiers;
  TierTable<RadioParams> radio{};
  NoiseSpec noise;
  LinkMode mode = LinkMode::snr;

  void validate() const;
};

struct TrialSample {
  GeoPoint user;
  Constellation platforms;
};

GeoPoint sample_user(const Deployment& d, std::uint64_t seed, std::uint64_t trial);
Constellation sample_platforms(const Deployment& d, std::uint64_t seed, std::uint64_t trial);
TrialSample sample_trial(const Deployment& d, std::uint64_t seed, std::uint64_t trial);

// Fading draws for a platform in a trial; stable under changes to other tiers.
CounterRng fading_stream(std::uint64_t seed, std::uint64_t trial, const Platform& p);

}  // namespace ntnsim
