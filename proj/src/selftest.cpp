#include "ntnsim/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "ntnsim/channel.hpp"
#include "ntnsim/constants.hpp"
#include "ntnsim/deployment.hpp"
#include "ntnsim/geom.hpp"
#include "ntnsim/kernels.hpp"
#include "ntnsim/metrics.hpp"
#include "ntnsim/pointproc.hpp"
#include "ntnsim/rng.hpp"

namespace ntnsim {

namespace {

constexpr std::uint64_t kSeed = 20240501;

SelftestCheck check(std::string name, double measured, double reference, double tolerance, double scale) {
  const double tol = tolerance * scale;
  return {std::move(name), measured, reference, tol, std::abs(measured - reference) <= tol};
}

// Uniform directions on the whole sphere, counted inside a 90-degree cap.
SelftestCheck cap_area_vs_rejection(double scale) {
  const SphericalCap cap({0.0, 0.0, 1.0}, kPi / 2.0, kEarthRadiusKm);
  constexpr std::int64_t n = 1'000'000;
  const StreamFamily fam(kSeed, "selftest.cap");
  CounterRng rng = fam.at(0);
  std::int64_t inside = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const Vec3 d{standard_normal(rng), standard_normal(rng), standard_normal(rng)};
    inside += cap.contains(normalized(d)) ? 1 : 0;
  }
  const double sphere = 4.0 * kPi * kEarthRadiusKm * kEarthRadiusKm;
  const double estimate = sphere * static_cast<double>(inside) / static_cast<double>(n);
  const double exact = cap_area(cap);
  return check("cap area vs rejection sampling [km^2]", estimate, exact, 0.01 * exact, scale);
}

SelftestCheck cap_area_reference(double scale) {
  const double a = cap_area(SphericalCap({0.0, 0.0, 1.0}, kPi / 45.0, kEarthRadiusKm));
  return check("cap area, R=6371 km, apex pi/45 [km^2]", a, 1.5536e5, 1.5536e5 * 1e-3, scale);
}

// P(no point) of a PPP on a cap is exp(-density * area).
SelftestCheck ppp_null_probability(double scale) {
  const SphericalCap cap({0.0, 0.0, 1.0}, kPi / 45.0, kEarthRadiusKm + 20.0);
  const double density = 1.5 / cap_area(cap);
  constexpr std::int64_t trials = 100'000;
  std::int64_t empty = 0;
  for (std::int64_t t = 0; t < trials; ++t) {
    const StreamFamily fam(kSeed, "selftest.null", static_cast<std::uint64_t>(t));
    empty += sample_ppp_cap(density, cap, fam).empty() ? 1 : 0;
  }
  const double p = std::exp(-1.5);
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return check("PPP null probability", static_cast<double>(empty) / trials, p, 3.0 * sigma, scale);
}

SelftestCheck empty_deployment_availability(double scale) {
  Deployment d;
  d.users.kind = UserKind::fixed;
  d.users.fixed = GeoPoint(kEarthRadiusKm, d.site);
  d.base_station = GeoPoint(kEarthRadiusKm, offset_direction(d.site, 500.0 / kEarthRadiusKm, 0.0));
  const MetricEstimate e = relay_availability(d, 1000, kSeed, RunOptions{1});
  return check("availability with no platforms", e.value, 0.0, 0.0, scale);
}

SelftestCheck fading_mean(const std::string& name, const FadingSpec& spec, double expected, double scale) {
  constexpr std::int64_t n = 1'000'000;
  const StreamFamily fam(kSeed, "selftest.fading");
  CounterRng rng = fam.at(static_cast<std::uint32_t>(spec.index()));
  double sum = 0.0;
  for (std::int64_t i = 0; i < n; ++i) sum += sample_fading(spec, rng);
  return check(name, sum / static_cast<double>(n), expected, 0.01 * expected, scale);
}

// Steps a satellite along its orbit in 1 s increments and counts visible seconds.
SelftestCheck pass_duration_vs_propagation(double scale) {
  const double orbit_r = kEarthRadiusKm + 550.0;
  const double offset = 0.12;
  const Vec3 e1{1.0, 0.0, 0.0};
  const Vec3 e2{0.0, 1.0, 0.0};
  const Vec3 n{0.0, 0.0, 1.0};
  const GeoPoint user(kEarthRadiusKm, std::cos(offset) * e1 + std::sin(offset) * n);
  const double period = orbital_period_s(orbit_r);
  const double omega = 2.0 * kPi / period;
  std::int64_t visible = 0;
  const auto steps = static_cast<std::int64_t>(std::floor(period / 2.0));
  for (std::int64_t s = -steps; s <= steps; ++s) {
    const double u = omega * static_cast<double>(s);
    const GeoPoint sat(orbit_r, std::cos(u) * e1 + std::sin(u) * e2);
    visible += is_visible(user, sat) ? 1 : 0;
  }
  return check("pass duration vs 1 s propagation [s]", static_cast<double>(visible),
               pass_duration(orbit_r, kEarthRadiusKm, offset), 2.0, scale);
}

// Analytic availability of n uniform satellites against the MC estimator.
SelftestCheck bpp_availability_oracle(double scale) {
  const GeoPoint user(kEarthRadiusKm, {0.0, 0.0, 1.0});
  const GeoPoint bs(kEarthRadiusKm, offset_direction({0.0, 0.0, 1.0}, 500.0 / kEarthRadiusKm, 0.0));
  const double r = kEarthRadiusKm + 550.0;
  const double p = common_los_fraction(user, bs, SphericalCap({0.0, 0.0, 1.0}, 2.0 * kPi, r), 1'000'000, kSeed);
  Deployment d;
  d.users.kind = UserKind::fixed;
  d.users.fixed = user;
  d.base_station = bs;
  TierProcess sats;
  sats.tier = Tier::sat;
  sats.kind = ProcessKind::bpp_sphere;
  sats.count = 20;
  sats.radius_km = r;
  d.tiers.push_back(sats);
  constexpr std::int64_t trials = 20'000;
  const MetricEstimate e = relay_availability(d, trials, kSeed + 1, RunOptions{1});
  const double a = analytic_bpp_availability(p, sats.count);
  const double sigma = std::sqrt(a * (1.0 - a) / static_cast<double>(trials));
  return check("BPP availability vs 1-(1-p)^n", e.value, a, 3.0 * sigma, scale);
}

SelftestCheck kernel_equivalence(double scale) {
  const StreamFamily fam(kSeed, "selftest.kernels");
  CounterRng rng = fam.at(0);
  kernels::PointsSoA pts;
  for (int i = 0; i < 4099; ++i) {
    const double radius = kEarthRadiusKm + 2000.0 * uniform01(rng);
    pts.push_back(radius * normalized({standard_normal(rng), standard_normal(rng), standard_normal(rng)}));
  }
  const Vec3 a = kEarthRadiusKm * normalized({0.1, 0.2, 1.0});
  const Vec3 b = (kEarthRadiusKm + 20.0) * normalized({0.3, -0.1, 1.0});
  std::vector<double> ref(pts.size()), got(pts.size());
  kernels::scalar::clear_ranges(pts, a, kBlockingRadiusKm, ref);
  kernels::clear_ranges(pts, a, kBlockingRadiusKm, got);
  double mismatches = std::memcmp(ref.data(), got.data(), ref.size() * sizeof(double)) == 0 ? 0.0 : 1.0;
  if (kernels::scalar::count_common_clear(pts, a, b, kBlockingRadiusKm) !=
      kernels::count_common_clear(pts, a, b, kBlockingRadiusKm)) {
    mismatches += 1.0;
  }
  const std::string name = "kernels " + std::string(kernels::backend_name(kernels::active_backend())) +
                           " vs scalar (bit mismatches)";
  return check(name, mismatches, 0.0, 0.0, scale);
}

}  // namespace

std::vector<SelftestCheck> run_selftest_checks(const SelftestOptions& options) {
  const double s = options.tolerance_scale;
  std::vector<SelftestCheck> out;
  out.push_back(cap_area_reference(s));
  out.push_back(cap_area_vs_rejection(s));
  out.push_back(ppp_null_probability(s));
  out.push_back(empty_deployment_availability(s));
  out.push_back(fading_mean("Nakagami(m=3, omega=1) mean", Nakagami{3.0, 1.0}, 1.0, s));
  out.push_back(fading_mean("shadowed-Rician(b=0.126, m=10.1, omega=0.835) mean", ShadowedRician{0.126, 10.1, 0.835},
                            2.0 * 0.126 + 0.835, s));
  out.push_back(pass_duration_vs_propagation(s));
  out.push_back(bpp_availability_oracle(s));
  out.push_back(kernel_equivalence(s));
  return out;
}

int run_selftest(std::ostream& os, const SelftestOptions& options) {
  const auto checks = run_selftest_checks(options);
  bool all = true;
  char line[256];
  std::snprintf(line, sizeof line, "%-52s %16s %16s %12s  %s\n", "check", "measured", "reference", "tolerance",
                "result");
  os << line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-52s %16.6g %16.6g %12.4g  %s\n", c.name.c_str(), c.measured, c.reference,
                  c.tolerance, c.passed ? "PASS" : "FAIL");
    os << line;
    all = all && c.passed;
  }
  os << (all ? "selftest: all checks passed\n" : "selftest: FAILED\n");
  return all ? 0 : 2;
}

}  // namespace ntnsim
