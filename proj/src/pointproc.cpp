#include "ntnsim/pointproc.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ntnsim {

std::string_view tier_name(Tier t) {
  switch (t) {
    case Tier::lap: return "lap";
    case Tier::hap: return "hap";
    case Tier::sat: return "sat";
  }
  return "?";
}

const Platform& Constellation::add(Tier tier, std::uint32_t index, const GeoPoint& position) {
  platforms_.push_back(Platform{static_cast<int>(platforms_.size()), tier, index, position});
  return platforms_.back();
}

void Constellation::append(const Constellation& other) {
  platforms_.reserve(platforms_.size() + other.size());
  for (const Platform& p : other) add(p.tier, p.index, p.position);
}

kernels::PointsSoA Constellation::positions() const {
  kernels::PointsSoA soa;
  soa.reserve(platforms_.size());
  for (const Platform& p : platforms_) soa.push_back(p.position.position());
  return soa;
}

void OrbitPlane::validate() const {
  if (!(inclination >= 0.0 && inclination <= kPi)) throw std::invalid_argument("orbit inclination must lie in [0, pi]");
  if (!(ascending_node >= 0.0 && ascending_node < 2.0 * kPi)) {
    throw std::invalid_argument("orbit ascending node must lie in [0, 2pi)");
  }
  if (!(radius_km > 0.0)) throw std::invalid_argument("orbit radius must be positive");
}

Vec3 orbit_position(const OrbitPlane& plane, double u) {
  const double co = std::cos(plane.ascending_node);
  const double so = std::sin(plane.ascending_node);
  const double ci = std::cos(plane.inclination);
  const double si = std::sin(plane.inclination);
  const double cu = std::cos(u);
  const double su = std::sin(u);
  return plane.radius_km * Vec3{co * cu - so * su * ci, so * cu + co * su * ci, su * si};
}

namespace {

Vec3 uniform_direction(CounterRng& rng) {
  for (;;) {
    const Vec3 g{standard_normal(rng), standard_normal(rng), standard_normal(rng)};
    const double n = norm(g);
    if (n > 1e-300) return (1.0 / n) * g;
  }
}

// Uniform direction within polar half-angle `half` of the frame's up axis.
Vec3 uniform_cap_direction(const LocalFrame& frame, double half, CounterRng& rng) {
  const double s = std::sin(0.5 * half);
  const double depth = 2.0 * s * s;  // 1 - cos(half)
  const double t = uniform01(rng) * depth;  // 1 - cos(theta), uniform on [0, depth)
  const double az = 2.0 * kPi * uniform01(rng);
  const double cos_t = 1.0 - t;
  const double sin_t = std::sqrt(std::max(0.0, t * (2.0 - t)));
  return normalized(cos_t * frame.up + (sin_t * std::cos(az)) * frame.east + (sin_t * std::sin(az)) * frame.north);
}

Vec3 uniform_disk_position(const DiskRegion& disk, const LocalFrame& frame, double altitude_m, CounterRng& rng) {
  const double r = disk.radius_km * std::sqrt(uniform01(rng));
  const double az = 2.0 * kPi * uniform01(rng);
  return (kEarthRadiusKm + altitude_m / 1000.0) * frame.up + (r * std::cos(az)) * frame.east +
         (r * std::sin(az)) * frame.north;
}

void check_count(double density, std::string_view what) {
  if (!(density >= 0.0) || !std::isfinite(density)) {
    throw std::invalid_argument(std::string(what) + " must be finite and nonnegative");
  }
}

}  // namespace

Constellation sample_bpp_sphere(std::size_t n, double radius_km, const StreamFamily& streams, Tier tier) {
  if (!(radius_km > 0.0)) throw std::invalid_argument("sample_bpp_sphere: radius must be positive");
  Constellation c;
  for (std::size_t i = 0; i < n; ++i) {
    CounterRng rng = streams.at(static_cast<std::uint32_t>(i));
    c.add(tier, static_cast<std::uint32_t>(i), GeoPoint(radius_km, uniform_direction(rng)));
  }
  return c;
}

Constellation sample_bpp_cap(std::size_t n, const SphericalCap& cap, const StreamFamily& streams, Tier tier) {
  const LocalFrame frame = local_frame(cap.center());
  Constellation c;
  for (std::size_t i = 0; i < n; ++i) {
    CounterRng rng = streams.at(static_cast<std::uint32_t>(i));
    c.add(tier, static_cast<std::uint32_t>(i),
          GeoPoint(cap.sphere_radius(), uniform_cap_direction(frame, cap.half_angle(), rng)));
  }
  return c;
}

Constellation sample_ppp_cap(double density_per_km2, const SphericalCap& cap, const StreamFamily& streams, Tier tier) {
  check_count(density_per_km2, "PPP density");
  CounterRng counts = streams.counts();
  const auto n = poisson_variate(counts, density_per_km2 * cap_area(cap));
  return sample_bpp_cap(n, cap, streams, tier);
}

Constellation sample_bpp_disk(std::size_t n, const DiskRegion& disk, double altitude_m, const StreamFamily& streams,
                              Tier tier) {
  if (!(disk.radius_km >= 0.0)) throw std::invalid_argument("disk radius must be nonnegative");
  const LocalFrame frame = local_frame(disk.center);
  Constellation c;
  for (std::size_t i = 0; i < n; ++i) {
    CounterRng rng = streams.at(static_cast<std::uint32_t>(i));
    c.add(tier, static_cast<std::uint32_t>(i),
          GeoPoint::from_position(uniform_disk_position(disk, frame, altitude_m, rng)));
  }
  return c;
}

Constellation sample_ppp_disk(double density_per_km2, const DiskRegion& disk, double altitude_m,
                              const StreamFamily& streams, Tier tier) {
  check_count(density_per_km2, "PPP density");
  CounterRng counts = streams.counts();
  const auto n = poisson_variate(counts, density_per_km2 * kPi * disk.radius_km * disk.radius_km);
  return sample_bpp_disk(n, disk, altitude_m, streams, tier);
}

CoxRealization sample_cox_orbits(double orbit_rate, double sats_per_orbit_mean,
                                 std::pair<double, double> altitude_range_km, const StreamFamily& streams) {
  check_count(orbit_rate, "orbit rate");
  check_count(sats_per_orbit_mean, "satellites per orbit");
  const auto [alt_lo, alt_hi] = altitude_range_km;
  if (!(alt_lo >= 160.0 && alt_hi <= 2000.0 && alt_lo <= alt_hi)) {
    throw std::invalid_argument("Cox altitude range must satisfy 160 <= min <= max <= 2000 km");
  }
  CoxRealization out;
  CounterRng counts = streams.counts();
  const auto n_planes = poisson_variate(counts, orbit_rate);
  std::uint32_t sat_index = 0;
  for (std::uint64_t j = 0; j < n_planes; ++j) {
    CounterRng rng = streams.at(static_cast<std::uint32_t>(j));
    OrbitPlane plane;
    plane.ascending_node = 2.0 * kPi * uniform01(rng);
    plane.inclination = kPi * uniform01(rng);
    plane.radius_km = kEarthRadiusKm + alt_lo + (alt_hi - alt_lo) * uniform01(rng);
    out.planes.push_back(plane);

    const StreamFamily on_plane = streams.derive(j + 1);
    CounterRng plane_counts = on_plane.counts();
    const auto n_sats = poisson_variate(plane_counts, sats_per_orbit_mean);
    for (std::uint64_t i = 0; i < n_sats; ++i) {
      CounterRng srng = on_plane.at(static_cast<std::uint32_t>(i));
      out.satellites.add(Tier::sat, sat_index++,
                         GeoPoint::from_position(orbit_position(plane, 2.0 * kPi * uniform01(srng))));
    }
  }
  return out;
}

Constellation sample_orbit_model(const std::vector<OrbitPlane>& planes, std::size_t sats_per_plane,
                                 const StreamFamily& streams) {
  if (planes.empty()) throw std::invalid_argument("sample_orbit_model: at least one orbit plane is required");
  Constellation c;
  std::uint32_t sat_index = 0;
  for (std::size_t j = 0; j < planes.size(); ++j) {
    planes[j].validate();
    const StreamFamily on_plane = streams.derive(j + 1);
    for (std::size_t i = 0; i < sats_per_plane; ++i) {
      CounterRng rng = on_plane.at(static_cast<std::uint32_t>(i));
      c.add(Tier::sat, sat_index++, GeoPoint::from_position(orbit_position(planes[j], 2.0 * kPi * uniform01(rng))));
    }
  }
  return c;
}

GeoPoint uniform_on_cap(const SphericalCap& cap, CounterRng& rng) {
  return GeoPoint(cap.sphere_radius(), uniform_cap_direction(local_frame(cap.center()), cap.half_angle(), rng));
}

GeoPoint uniform_on_disk(const DiskRegion& disk, double altitude_m, CounterRng& rng) {
  return GeoPoint::from_position(uniform_disk_position(disk, local_frame(disk.center), altitude_m, rng));
}

}  // namespace ntnsim
