#pragma once

// Per-lane reference for the segment/ball clearance test. The SIMD backends
// mirror this exact operation order.

namespace ntnsim::kernels::detail {

struct Observer {
  double x, y, z;
  double oo;  // |o|^2
};

inline Observer make_observer(double x, double y, double z) {
  return {x, y, z, x * x + y * y + z * z};
}

// Closest point of segment o->p to the origin is o + t*(p-o), t = -o.d/|d|^2.
// t <= 0: closest at o. t >= 1: closest at p. Otherwise the squared distance
// is |o x p|^2 / |d|^2.
inline bool clear(const Observer& o, double px, double py, double pz, double r2, double* range2) {
  const double dx = px - o.x;
  const double dy = py - o.y;
  const double dz = pz - o.z;
  const double dd = dx * dx + dy * dy + dz * dz;
  const double od = o.x * dx + o.y * dy + o.z * dz;
  const double pp = px * px + py * py + pz * pz;
  const double cx = o.y * pz - o.z * py;
  const double cy = o.z * px - o.x * pz;
  const double cz = o.x * py - o.y * px;
  const double cc = cx * cx + cy * cy + cz * cz;
  if (range2 != nullptr) *range2 = dd;
  if (od >= 0.0) return o.oo >= r2;
  if (-od >= dd) return pp >= r2;
  return cc >= r2 * dd;
}

}  // namespace ntnsim::kernels::detail
