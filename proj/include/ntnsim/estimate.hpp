#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

#include "ntnsim/rng.hpp"

namespace ntnsim {

inline constexpr double kZ95 = 1.959963984540054;

struct MetricEstimate {
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::int64_t trials = 0;

  double half_width() const { return 0.5 * (ci_high - ci_low); }
};

struct RunOptions {
  unsigned workers = 0;  // 0: hardware concurrency
};

unsigned resolve_workers(unsigned requested);

// Runs body(begin, end) over contiguous chunks of [0, n) on up to `workers`
// threads. Chunks are disjoint; callers write per-index results.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t, std::size_t)>& body);

MetricEstimate wilson_interval(std::int64_t successes, std::int64_t trials, double z = kZ95);

// Neumaier-compensated mean with a normal-approximation interval.
MetricEstimate normal_interval(std::span<const double> values, double z = kZ95);

struct TrialContext {
  std::uint64_t seed;
  std::uint64_t trial;

  StreamFamily streams(std::string_view label) const { return StreamFamily(seed, label, trial); }
};

enum class IntervalKind { normal, wilson };

// Mean of sampler(trial) over `trials` trials. With IntervalKind::wilson the
// sampler must return 0 or 1. Results are independent of the worker count.
MetricEstimate estimate_mean(const std::function<double(const TrialContext&)>& sampler, std::int64_t trials,
                             std::uint64_t seed, IntervalKind kind = IntervalKind::normal, RunOptions options = {});

}  // namespace ntnsim
