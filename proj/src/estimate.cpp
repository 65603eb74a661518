#include "ntnsim/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ntnsim {

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t, std::size_t)>& body) {
  workers = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

MetricEstimate wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {p, std::min(p, std::max(0.0, center - half)), std::max(p, std::min(1.0, center + half)), trials};
}

MetricEstimate normal_interval(std::span<const double> values, double z) {
  if (values.empty()) throw std::invalid_argument("normal_interval: no values");
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  const double n = static_cast<double>(values.size());
  const double mean = (sum + comp) / n;
  double ss = 0.0;
  double ss_comp = 0.0;
  for (double v : values) {
    const double d = (v - mean) * (v - mean);
    const double t = ss + d;
    ss_comp += std::abs(ss) >= std::abs(d) ? (ss - t) + d : (d - t) + ss;
    ss = t;
  }
  const double var = values.size() > 1 ? (ss + ss_comp) / (n - 1.0) : 0.0;
  const double half = z * std::sqrt(var / n);
  return {mean, mean - half, mean + half, static_cast<std::int64_t>(values.size())};
}

MetricEstimate estimate_mean(const std::function<double(const TrialContext&)>& sampler, std::int64_t trials,
                             std::uint64_t seed, IntervalKind kind, RunOptions options) {
  if (trials < 1) throw std::invalid_argument("estimate_mean: trials must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_for(values.size(), options.workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) values[t] = sampler(TrialContext{seed, t});
  });
  if (kind == IntervalKind::wilson) {
    std::int64_t hits = 0;
    for (double v : values) {
      if (v != 0.0 && v != 1.0) throw std::invalid_argument("estimate_mean: Wilson interval needs 0/1 trial values");
      hits += v == 1.0 ? 1 : 0;
    }
    return wilson_interval(hits, trials);
  }
  return normal_interval(values);
}

}  // namespace ntnsim
