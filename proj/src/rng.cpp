#include "ntnsim/rng.hpp"

#include <random>

namespace ntnsim {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

}  // namespace

PhiloxCounter philox4x32(PhiloxCounter c, PhiloxKey k) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k[0] += kWeyl0;
      k[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }
  return c;
}

std::uint64_t mix64(std::uint64_t x) {
  // splitmix64 finalizer
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xCBF29CE484222325ull;  // FNV-1a
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001B3ull;
  }
  return h;
}

CounterRng::CounterRng(std::uint64_t key, std::uint64_t trial, std::uint32_t entity)
    : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
      trial_lo_(static_cast<std::uint32_t>(trial)),
      trial_hi_(static_cast<std::uint32_t>(trial >> 32)),
      entity_(entity) {}

CounterRng::result_type CounterRng::operator()() {
  if (buffered_ == 0) {
    const PhiloxCounter out = philox4x32({block_++, entity_, trial_lo_, trial_hi_}, key_);
    buffer_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
    buffer_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
    buffered_ = 2;
  }
  return buffer_[2 - buffered_--];
}

StreamFamily::StreamFamily(std::uint64_t seed, std::string_view label, std::uint64_t trial)
    : key_(mix64(mix64(seed) ^ hash_label(label))), trial_(trial) {}

StreamFamily StreamFamily::derive(std::uint64_t tag) const { return StreamFamily(mix64(key_ ^ mix64(tag)), trial_, 0); }

// The std distributions below are constructed per draw, so no cached state
// carries between draws and each value is a pure function of the stream.

double standard_normal(CounterRng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

double gamma_variate(CounterRng& rng, double shape, double scale) {
  return std::gamma_distribution<double>(shape, scale)(rng);
}

std::uint64_t poisson_variate(CounterRng& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  return std::poisson_distribution<std::uint64_t>(mean)(rng);
}

}  // namespace ntnsim
