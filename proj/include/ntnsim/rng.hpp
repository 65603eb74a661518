#pragma once

// Counter-based random streams.
//
// Every random quantity in a simulation is drawn from a stream addressed by
// (global seed, label, trial, entity). A stream is Philox4x32-10 keyed by a hash
// of (seed, label) and counted over (block, entity, trial), so draws do not
// depend on evaluation order or on how trials are split across workers.

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace ntnsim {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// Ten-round Philox4x32 block function.
PhiloxCounter philox4x32(PhiloxCounter counter, PhiloxKey key);

std::uint64_t hash_label(std::string_view label);
std::uint64_t mix64(std::uint64_t x);

// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t key, std::uint64_t trial, std::uint32_t entity);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

 private:
  PhiloxKey key_;
  std::uint32_t trial_lo_;
  std::uint32_t trial_hi_;
  std::uint32_t entity_;
  std::uint32_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

// All streams that share (seed, label, trial); entities index into it.
class StreamFamily {
 public:
  // Entity index reserved for per-family scalars such as Poisson counts.
  static constexpr std::uint32_t kCountEntity = 0xFFFF'FFFFu;

  StreamFamily(std::uint64_t seed, std::string_view label, std::uint64_t trial = 0);

  CounterRng at(std::uint32_t entity) const { return CounterRng(key_, trial_, entity); }
  CounterRng counts() const { return at(kCountEntity); }

  // Independent family for a numbered sub-population.
  StreamFamily derive(std::uint64_t tag) const;

  std::uint64_t trial() const { return trial_; }

 private:
  StreamFamily(std::uint64_t key, std::uint64_t trial, int) : key_(key), trial_(trial) {}

  std::uint64_t key_;
  std::uint64_t trial_;
};

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(CounterRng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform on (0, 1].
inline double uniform01_open_low(CounterRng& rng) { return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53; }

double standard_normal(CounterRng& rng);
double gamma_variate(CounterRng& rng, double shape, double scale);
std::uint64_t poisson_variate(CounterRng& rng, double mean);

}  // namespace ntnsim
