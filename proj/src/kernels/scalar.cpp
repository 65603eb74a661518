#include <cmath>

#include "ntnsim/kernels.hpp"
#include "segment.hpp"

namespace ntnsim::kernels::scalar {

std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b, double blocking_radius) {
  const auto oa = detail::make_observer(a.x, a.y, a.z);
  const auto ob = detail::make_observer(b.x, b.y, b.z);
  const double r2 = blocking_radius * blocking_radius;
  std::size_t count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool va = detail::clear(oa, points.x[i], points.y[i], points.z[i], r2, nullptr);
    const bool vb = detail::clear(ob, points.x[i], points.y[i], points.z[i], r2, nullptr);
    count += (va && vb) ? 1 : 0;
  }
  return count;
}

void clear_ranges(PointsView points, Vec3 observer, double blocking_radius, std::span<double> out) {
  const auto o = detail::make_observer(observer.x, observer.y, observer.z);
  const double r2 = blocking_radius * blocking_radius;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double dd = 0.0;
    const bool v = detail::clear(o, points.x[i], points.y[i], points.z[i], r2, &dd);
    out[i] = v ? std::sqrt(dd) : -1.0;
  }
}

}  // namespace ntnsim::kernels::scalar
