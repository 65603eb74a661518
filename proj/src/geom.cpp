#include "ntnsim/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ntnsim/kernels.hpp"

namespace ntnsim {

Vec3 normalized(Vec3 v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  return (1.0 / n) * v;
}

GeoPoint::GeoPoint(double radius_km, Vec3 direction) : radius_(radius_km), direction_(normalized(direction)) {
  if (!(radius_km > 0.0) || !std::isfinite(radius_km)) {
    throw std::invalid_argument("GeoPoint radius must be positive and finite, got " + std::to_string(radius_km));
  }
}

GeoPoint GeoPoint::from_position(Vec3 position_km) { return GeoPoint(norm(position_km), position_km); }

SphericalCap::SphericalCap(Vec3 center, double apex_angle, double sphere_radius_km)
    : center_(normalized(center)), apex_angle_(apex_angle), sphere_radius_(sphere_radius_km) {
  if (!(apex_angle >= 0.0 && apex_angle <= 2.0 * kPi)) {
    throw std::invalid_argument("cap apex angle must lie in [0, 2pi], got " + std::to_string(apex_angle));
  }
  if (!(sphere_radius_km > 0.0)) {
    throw std::invalid_argument("cap sphere radius must be positive, got " + std::to_string(sphere_radius_km));
  }
}

bool SphericalCap::contains(Vec3 direction) const { return central_angle(center_, direction) <= half_angle(); }

double cap_area(const SphericalCap& cap) {
  const double r = cap.sphere_radius();
  // 1 - cos(h) = 2 sin^2(h/2) keeps small caps accurate.
  const double s = std::sin(0.5 * cap.half_angle());
  return 2.0 * kPi * r * r * (2.0 * s * s);
}

double central_angle(Vec3 a, Vec3 b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

double central_angle(const GeoPoint& p, const GeoPoint& q) { return central_angle(p.direction(), q.direction()); }

double slant_range(const GeoPoint& user, const GeoPoint& platform) {
  const double ru = user.radius();
  const double rp = platform.radius();
  const double s = std::sin(0.5 * central_angle(user, platform));
  // Law of cosines, rearranged as (ru - rp)^2 + 4 ru rp sin^2(phi/2).
  return std::sqrt((ru - rp) * (ru - rp) + 4.0 * ru * rp * s * s);
}

double max_visibility_angle(double r_low_km, double r_high_km) {
  if (!(r_low_km > 0.0)) throw std::invalid_argument("max_visibility_angle: r_low must be positive");
  if (r_high_km < r_low_km) {
    throw std::invalid_argument("max_visibility_angle: r_high (" + std::to_string(r_high_km) +
                                ") is below r_low (" + std::to_string(r_low_km) + ")");
  }
  return std::acos(std::clamp(r_low_km / r_high_km, 0.0, 1.0));
}

bool is_visible(const GeoPoint& observer, const GeoPoint& platform) {
  return kernels::segment_clear(observer.position(), platform.position(), kBlockingRadiusKm);
}

bool in_common_los(const GeoPoint& platform, const GeoPoint& a, const GeoPoint& b) {
  return is_visible(a, platform) && is_visible(b, platform);
}

double session_arc_half_angle(double orbit_radius_km, double user_radius_km, double plane_offset) {
  if (!(orbit_radius_km > user_radius_km)) {
    throw std::invalid_argument("session_arc_half_angle: orbit radius must exceed user radius");
  }
  if (!(plane_offset >= 0.0 && plane_offset <= 0.5 * kPi)) {
    throw std::invalid_argument("session_arc_half_angle: plane offset must lie in [0, pi/2]");
  }
  const double phi_max = max_visibility_angle(user_radius_km, orbit_radius_km);
  if (plane_offset >= phi_max) return 0.0;
  return std::acos(std::clamp(std::cos(phi_max) / std::cos(plane_offset), -1.0, 1.0));
}

LocalFrame local_frame(Vec3 up) {
  up = normalized(up);
  const Vec3 pole{0.0, 0.0, 1.0};
  Vec3 east = cross(pole, up);
  if (norm(east) < 1e-12) {
    east = {0.0, 1.0, 0.0};
  } else {
    east = normalized(east);
  }
  const Vec3 north = cross(up, east);
  return {east, north, up};
}

Vec3 offset_direction(Vec3 center, double polar, double azimuth) {
  const LocalFrame f = local_frame(center);
  const double s = std::sin(polar);
  return normalized(std::cos(polar) * f.up + (s * std::cos(azimuth)) * f.east + (s * std::sin(azimuth)) * f.north);
}

}  // namespace ntnsim
