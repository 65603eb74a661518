#pragma once

// Batched line-of-sight kernels over structure-of-arrays platform positions.
//
// Every backend evaluates the same sequence of IEEE operations per lane, so
// results are bit-identical across backends. The active backend is chosen at
// first use from the CPU's capabilities; NTNSIM_KERNELS=scalar|avx2|neon in the
// environment, or set_backend(), overrides the choice.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "ntnsim/vec3.hpp"

namespace ntnsim::kernels {

struct PointsSoA {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> z;

  std::size_t size() const { return x.size(); }
  void reserve(std::size_t n);
  void push_back(Vec3 p);
  void clear();
};

struct PointsView {
  std::span<const double> x;
  std::span<const double> y;
  std::span<const double> z;

  PointsView() = default;
  PointsView(const PointsSoA& soa) : x(soa.x), y(soa.y), z(soa.z) {}
  std::size_t size() const { return x.size(); }
};

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend best_backend();
Backend active_backend();
// Throws std::invalid_argument when the CPU cannot run `b`.
void set_backend(Backend b);

// Number of points whose segments to both `a` and `b` stay outside the ball of
// `blocking_radius` centered at the origin.
std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b, double blocking_radius);

// out[i] = |p_i - observer| when the segment is clear, -1 otherwise.
void clear_ranges(PointsView points, Vec3 observer, double blocking_radius, std::span<double> out);

// Single-pair reference used by geom::is_visible.
bool segment_clear(Vec3 a, Vec3 b, double blocking_radius);

namespace scalar {
std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b, double blocking_radius);
void clear_ranges(PointsView points, Vec3 observer, double blocking_radius, std::span<double> out);
}  // namespace scalar

namespace avx2 {
std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b, double blocking_radius);
void clear_ranges(PointsView points, Vec3 observer, double blocking_radius, std::span<double> out);
}  // namespace avx2

namespace neon {
std::size_t count_common_clear(PointsView points, Vec3 a, Vec3 b, double blocking_radius);
void clear_ranges(PointsView points, Vec3 observer, double blocking_radius, std::span<double> out);
}  // namespace neon

}  // namespace ntnsim::kernels
