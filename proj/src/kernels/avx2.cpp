#include <cmath>

#include "ntnsim/kernels.hpp"
#include "segment.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define NTNSIM_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace ntnsim::kernels::avx2 {

#if defined(NTNSIM_HAVE_AVX2_KERNELS)

namespace {

// Mirrors detail::clear lane by lane. Returns an all-ones mask where clear.
__attribute__((target("avx2"))) inline __m256d clear_mask(
    const detail::Observer& o, __m256d px, __m256d py, __m256d pz, double r2s, __m256d* range2) {
  const __m256d r2 = _mm256_set1_pd(r2s);
  const __m256d ox = _mm256_set1_pd(o.x);
  const __m256d oy = _mm256_set1_pd(o.y);
  const __m256d oz = _mm256_set1_pd(o.z);
  const __m256d dx = _mm256_sub_pd(px, ox);
  const __m256d dy = _mm256_sub_pd(py, oy);
  const __m256d dz = _mm256_sub_pd(pz, oz);
  const __m256d dd = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                   _mm256_mul_pd(dz, dz));
  const __m256d od = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ox, dx), _mm256_mul_pd(oy, dy)),
                                   _mm256_mul_pd(oz, dz));
  const __m256d pp = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(px, px), _mm256_mul_pd(py, py)),
                                   _mm256_mul_pd(pz, pz));
  const __m256d cx = _mm256_sub_pd(_mm256_mul_pd(oy, pz), _mm256_mul_pd(oz, py));
  const __m256d cy = _mm256_sub_pd(_mm256_mul_pd(oz, px), _mm256_mul_pd(ox, pz));
  const __m256d cz = _mm256_sub_pd(_mm256_mul_pd(ox, py), _mm256_mul_pd(oy, px));
  const __m256d cc = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(cx, cx), _mm256_mul_pd(cy, cy)),
                                   _mm256_mul_pd(cz, cz));
  if (range2 != nullptr) *range2 = dd;

  const __m256d sign = _mm256_set1_pd(-0.0);
  const __m256d near_sel = _mm256_cmp_pd(od, _mm256_setzero_pd(), _CMP_GE_OQ);
  const __m256d far_sel = _mm256_cmp_pd(_mm256_xor_pd(od, sign), dd, _CMP_GE_OQ);
  const __m256d near_ok = (o.oo >= r2s) ? _mm256_castsi256_pd(_mm256_set1_epi64x(-1))
                                                         : _mm256_setzero_pd();
  const __m256d far_ok = _mm256_cmp_pd(pp, r2, _CMP_GE_OQ);
  const __m256d mid_ok = _mm256_cmp_pd(cc, _mm256_mul_pd(r2, dd), _CMP_GE_OQ);
  const __m256d inner = _mm256_blendv_pd(mid_ok, far_ok, far_sel);
  return _mm256_blendv_pd(inner, near_ok, near_sel);
}

}  // namespace

__attribute__((target("avx2"))) std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b,
                                                               double blocking_radius) {
  const auto oa = detail::make_observer(a.x, a.y, a.z);
  const auto ob = detail::make_observer(b.x, b.y, b.z);
  const double r2s = blocking_radius * blocking_radius;
  const std::size_t n = points.size();
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d px = _mm256_loadu_pd(points.x.data() + i);
    const __m256d py = _mm256_loadu_pd(points.y.data() + i);
    const __m256d pz = _mm256_loadu_pd(points.z.data() + i);
    const __m256d va = clear_mask(oa, px, py, pz, r2s, nullptr);
    const __m256d vb = clear_mask(ob, px, py, pz, r2s, nullptr);
    count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(_mm256_and_pd(va, vb))));
  }
  for (; i < n; ++i) {
    const bool va = detail::clear(oa, points.x[i], points.y[i], points.z[i], r2s, nullptr);
    const bool vb = detail::clear(ob, points.x[i], points.y[i], points.z[i], r2s, nullptr);
    count += (va && vb) ? 1 : 0;
  }
  return count;
}

__attribute__((target("avx2"))) void clear_ranges(PointsView points, Vec3 observer, double blocking_radius,
                                                  std::span<double> out) {
  const auto o = detail::make_observer(observer.x, observer.y, observer.z);
  const double r2s = blocking_radius * blocking_radius;
  const __m256d blocked = _mm256_set1_pd(-1.0);
  const std::size_t n = points.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d px = _mm256_loadu_pd(points.x.data() + i);
    const __m256d py = _mm256_loadu_pd(points.y.data() + i);
    const __m256d pz = _mm256_loadu_pd(points.z.data() + i);
    __m256d dd;
    const __m256d ok = clear_mask(o, px, py, pz, r2s, &dd);
    _mm256_storeu_pd(out.data() + i, _mm256_blendv_pd(blocked, _mm256_sqrt_pd(dd), ok));
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

}  // namespace ntnsim::kernels::avx2
