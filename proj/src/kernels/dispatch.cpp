#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ntnsim/kernels.hpp"
#include "segment.hpp"

namespace ntnsim::kernels {

void PointsSoA::reserve(std::size_t n) {
  x.reserve(n);
  y.reserve(n);
  z.reserve(n);
}

void PointsSoA::push_back(Vec3 p) {
  x.push_back(p.x);
  y.push_back(p.y);
  z.push_back(p.z);
}

void PointsSoA::clear() {
  x.clear();
  y.clear();
  z.clear();
}

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Backend::neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend best_backend() {
  if (backend_supported(Backend::avx2)) return Backend::avx2;
  if (backend_supported(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

namespace {

Backend initial_backend() {
  if (const char* env = std::getenv("NTNSIM_KERNELS")) {
    const std::string name(env);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
      if (name == backend_name(b) && backend_supported(b)) return b;
    }
  }
  return best_backend();
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument("kernel backend '" + std::string(backend_name(b)) + "' is not supported on this CPU");
  }
  current().store(b, std::memory_order_relaxed);
}

std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b, double blocking_radius) {
  switch (active_backend()) {
    case Backend::avx2: return avx2::count_common_clear(points, a, b, blocking_radius);
    case Backend::neon: return neon::count_common_clear(points, a, b, blocking_radius);
    case Backend::scalar: break;
  }
  return scalar::count_common_clear(points, a, b, blocking_radius);
}

void clear_ranges(PointsView points, Vec3 observer, double blocking_radius, std::span<double> out) {
  if (out.size() < points.size()) throw std::invalid_argument("clear_ranges: output span too small");
  switch (active_backend()) {
    case Backend::avx2: avx2::clear_ranges(points, observer, blocking_radius, out); return;
    case Backend::neon: neon::clear_ranges(points, observer, blocking_radius, out); return;
    case Backend::scalar: break;
  }
  scalar::clear_ranges(points, observer, blocking_radius, out);
}

bool segment_clear(Vec3 a, Vec3 b, double blocking_radius) {
  const auto o = detail::make_observer(a.x, a.y, a.z);
  return detail::clear(o, b.x, b.y, b.z, blocking_radius * blocking_radius, nullptr);
}

}  // namespace ntnsim::kernels
