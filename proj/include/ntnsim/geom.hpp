#pragma once

#include "ntnsim/constants.hpp"
#include "ntnsim/vec3.hpp"

namespace ntnsim {

// A position in Earth-centered coordinates, stored as radius plus unit direction.
class GeoPoint {
 public:
  GeoPoint() = default;

  // `direction` need not be normalized; it must be nonzero and `radius` > 0.
  GeoPoint(double radius_km, Vec3 direction);

  static GeoPoint from_position(Vec3 position_km);

  double radius() const { return radius_; }
  Vec3 direction() const { return direction_; }
  Vec3 position() const { return radius_ * direction_; }

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;

 private:
  double radius_ = kEarthRadiusKm;
  Vec3 direction_{0.0, 0.0, 1.0};
};

// Region of a sphere cut out by a cone from the Earth center. `apex_angle` is the
// full opening angle of the cone; the polar half-angle is apex_angle / 2.
class SphericalCap {
 public:
  SphericalCap(Vec3 center, double apex_angle, double sphere_radius_km);

  Vec3 center() const { return center_; }
  double apex_angle() const { return apex_angle_; }
  double half_angle() const { return 0.5 * apex_angle_; }
  double sphere_radius() const { return sphere_radius_; }

  bool contains(Vec3 direction) const;

  friend bool operator==(const SphericalCap&, const SphericalCap&) = default;

 private:
  Vec3 center_;
  double apex_angle_;
  double sphere_radius_;
};

double cap_area(const SphericalCap& cap);

// Angle between the two directions, in [0, pi].
double central_angle(const GeoPoint& p, const GeoPoint& q);
double central_angle(Vec3 a, Vec3 b);

double slant_range(const GeoPoint& user, const GeoPoint& platform);

// Largest central angle at which a point at r_high is still above the horizon
// of a point at r_low. Accepts r_high = +inf.
double max_visibility_angle(double r_low_km, double r_high_km);

// True when the straight segment between the two points does not enter the
// Earth. Symmetric in its arguments; for an observer on the surface this is the
// horizon rule dot(observer, platform) >= |observer|^2.
bool is_visible(const GeoPoint& observer, const GeoPoint& platform);

bool in_common_los(const GeoPoint& platform, const GeoPoint& a, const GeoPoint& b);

// Half-angle of the arc of a circular orbit that is visible to a user whose
// angular distance from the orbit's great circle is `plane_offset`.
double session_arc_half_angle(double orbit_radius_km, double user_radius_km, double plane_offset);

// Orthonormal local frame at `up`: east, north, up. At the poles east is +y.
struct LocalFrame {
  Vec3 east;
  Vec3 north;
  Vec3 up;
};
LocalFrame local_frame(Vec3 up);

// Direction at central angle `polar` from `center`, rotated by `azimuth` around it.
Vec3 offset_direction(Vec3 center, double polar, double azimuth);

Vec3 normalized(Vec3 v);

}  // namespace ntnsim
