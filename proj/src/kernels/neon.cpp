#include <cmath>

#include "ntnsim/kernels.hpp"
#include "segment.hpp"

#if defined(__aarch64__)
#define NTNSIM_HAVE_NEON_KERNELS 1
#include <arm_neon.h>
#endif

namespace ntnsim::kernels::neon {

#if defined(NTNSIM_HAVE_NEON_KERNELS)

namespace {

// Mirrors detail::clear lane by lane.
inline uint64x2_t clear_mask(const detail::Observer& o, float64x2_t px, float64x2_t py, float64x2_t pz,
                             double r2s, float64x2_t* range2) {
  const float64x2_t ox = vdupq_n_f64(o.x);
  const float64x2_t oy = vdupq_n_f64(o.y);
  const float64x2_t oz = vdupq_n_f64(o.z);
  const float64x2_t r2 = vdupq_n_f64(r2s);
  const float64x2_t dx = vsubq_f64(px, ox);
  const float64x2_t dy = vsubq_f64(py, oy);
  const float64x2_t dz = vsubq_f64(pz, oz);
  const float64x2_t dd = vaddq_f64(vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)), vmulq_f64(dz, dz));
  const float64x2_t od = vaddq_f64(vaddq_f64(vmulq_f64(ox, dx), vmulq_f64(oy, dy)), vmulq_f64(oz, dz));
  const float64x2_t pp = vaddq_f64(vaddq_f64(vmulq_f64(px, px), vmulq_f64(py, py)), vmulq_f64(pz, pz));
  const float64x2_t cx = vsubq_f64(vmulq_f64(oy, pz), vmulq_f64(oz, py));
  const float64x2_t cy = vsubq_f64(vmulq_f64(oz, px), vmulq_f64(ox, pz));
  const float64x2_t cz = vsubq_f64(vmulq_f64(ox, py), vmulq_f64(oy, px));
  const float64x2_t cc = vaddq_f64(vaddq_f64(vmulq_f64(cx, cx), vmulq_f64(cy, cy)), vmulq_f64(cz, cz));
  if (range2 != nullptr) *range2 = dd;

  const uint64x2_t near_sel = vcgeq_f64(od, vdupq_n_f64(0.0));
  const uint64x2_t far_sel = vcgeq_f64(vnegq_f64(od), dd);
  const uint64x2_t near_ok = vdupq_n_u64(o.oo >= r2s ? ~0ULL : 0ULL);
  const uint64x2_t far_ok = vcgeq_f64(pp, r2);
  const uint64x2_t mid_ok = vcgeq_f64(cc, vmulq_f64(r2, dd));
  const uint64x2_t inner = vbslq_u64(far_sel, far_ok, mid_ok);
  return vbslq_u64(near_sel, near_ok, inner);
}

}  // namespace

std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b, double blocking_radius) {
  const auto oa = detail::make_observer(a.x, a.y, a.z);
  const auto ob = detail::make_observer(b.x, b.y, b.z);
  const double r2s = blocking_radius * blocking_radius;
  const std::size_t n = points.size();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t px = vld1q_f64(points.x.data() + i);
    const float64x2_t py = vld1q_f64(points.y.data() + i);
    const float64x2_t pz = vld1q_f64(points.z.data() + i);
    const uint64x2_t both = vandq_u64(clear_mask(oa, px, py, pz, r2s, nullptr),
                                      clear_mask(ob, px, py, pz, r2s, nullptr));
    count += (vgetq_lane_u64(both, 0) != 0 ? 1 : 0) + (vgetq_lane_u64(both, 1) != 0 ? 1 : 0);
  }
  for (; i < n; ++i) {
    const bool va = detail::clear(oa, points.x[i], points.y[i], points.z[i], r2s, nullptr);
    const bool vb = detail::clear(ob, points.x[i], points.y[i], points.z[i], r2s, nullptr);
    count += (va && vb) ? 1 : 0;
  }
  return count;
}

void clear_ranges(PointsView points, Vec3 observer, double blocking_radius, std::span<double> out) {
  const auto o = detail::make_observer(observer.x, observer.y, observer.z);
  const double r2s = blocking_radius * blocking_radius;
  const float64x2_t blocked = vdupq_n_f64(-1.0);
  const std::size_t n = points.size();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t px = vld1q_f64(points.x.data() + i);
    const float64x2_t py = vld1q_f64(points.y.data() + i);
    const float64x2_t pz = vld1q_f64(points.z.data() + i);
    float64x2_t dd;
    const uint64x2_t ok = clear_mask(o, px, py, pz, r2s, &dd);
    vst1q_f64(out.data() + i, vbslq_f64(ok, vsqrtq_f64(dd), blocked));
  }
  for (; i < n; ++i) {
    double dd = 0.0;
    const bool v = detail::clear(o, points.x[i], points.y[i], points.z[i], r2s, &dd);
    out[i] = v ? std::sqrt(dd) : -1.0;
  }
}

#else

std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b, double blocking_radius) {
  return scalar::count_common_clear(points, a, b, blocking_radius);
}

void clear_ranges(PointsView points, Vec3 observer, double blocking_radius, std::span<double> out) {
  scalar::clear_ranges(points, observer, blocking_radius, out);
}

#endif

}  // namespace ntnsim::kernels::neon
