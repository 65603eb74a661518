#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ntnsim/channel.hpp"
#include "ntnsim/constants.hpp"

using namespace ntnsim;

namespace {

RadioParams lap_radio() {
  RadioParams r;
  r.tx_power_dbw = 1.0;
  r.tx_gain_db = 10.0;
  r.fading = Nakagami{};
  return r;
}

RadioParams sat_radio() {
  RadioParams r;
  r.tx_power_dbw = 15.0;
  r.tx_gain_db = 70.0;
  r.fading = ShadowedRician{};
  return r;
}

// Free-space loss straight from the Friis form, distance in meters.
double friis_loss_db(double meters, double hz) { return 20.0 * std::log10(4.0 * kPi * meters * hz / kSpeedOfLight); }

}  // namespace

TEST_CASE("free-space path loss") {
  CHECK(fspl_db(0.08, 2e9) == doctest::Approx(76.53).epsilon(1e-4));
  CHECK(fspl_db(550.0, 2e9) == doctest::Approx(153.27).epsilon(1e-4));
  for (double km : {0.001, 0.08, 20.0, 550.0, 2703.8}) {
    for (double hz : {9e8, 2e9, 2e10}) CHECK(fspl_db(km, hz) == doctest::Approx(friis_loss_db(km * 1e3, hz)));
  }
  CHECK_THROWS(fspl_db(0.0, 2e9));
  CHECK_THROWS(fspl_db(-1.0, 2e9));
}

TEST_CASE("noise power") {
  const NoiseSpec n;
  CHECK(noise_power_dbw(n, 20e6) == doctest::Approx(-130.99).epsilon(1e-4));
  CHECK(noise_power_dbw(n, 1e6) == doctest::Approx(-144.0));
  CHECK(noise_power_dbw(n, 1.0) == doctest::Approx(-204.0));
}

TEST_CASE("received power and SNR of the reference links") {
  CHECK(mean_rx_power_dbw(lap_radio(), 0.08) == doctest::Approx(-65.53).epsilon(1e-4));
  CHECK(mean_rx_power_dbw(sat_radio(), 550.0) == doctest::Approx(-68.27).epsilon(1e-4));
  CHECK(snr_db(lap_radio(), 0.08, 1.0, NoiseSpec{}) == doctest::Approx(65.46).epsilon(1e-4));
  CHECK(snr_db(lap_radio(), 0.08, 0.5, NoiseSpec{}) == doctest::Approx(65.46 - 3.0103).epsilon(1e-4));
  CHECK(snr_db(lap_radio(), 0.08, 0.0, NoiseSpec{}) == -INFINITY);
  RadioParams with_rx = lap_radio();
  with_rx.rx_gain_db = 3.0;
  CHECK(mean_rx_power_dbw(with_rx, 0.08) == doctest::Approx(-62.53).epsilon(1e-4));
}

TEST_CASE("fading sample means") {
  constexpr int n = 1'000'000;
  CounterRng rng = StreamFamily(1, "fading").at(0);
  double nak = 0.0, sr = 0.0, none = 0.0;
  const Nakagami nk{3.0, 1.0};
  const ShadowedRician s{0.126, 10.1, 0.835};
  for (int i = 0; i < n; ++i) {
    nak += sample_fading(nk, rng);
    sr += sample_fading(s, rng);
    none += sample_fading(NoFading{}, rng);
  }
  CHECK(nak / n == doctest::Approx(1.0).epsilon(0.01));
  CHECK(sr / n == doctest::Approx(2.0 * 0.126 + 0.835).epsilon(0.01));
  CHECK(none == n);
}

TEST_CASE("Nakagami power follows Gamma(m, omega/m)") {
  constexpr int n = 100'000;
  CounterRng rng = StreamFamily(2, "fading").at(1);
  const Nakagami nk{2.0, 1.5};
  std::vector<double> xs(n);
  for (double& x : xs) x = sample_fading(nk, rng);
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (int i = 0; i < n; ++i) {
    const double f = boost::math::gamma_p(nk.m, nk.m * xs[i] / nk.omega);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  CHECK(d < 1.6276 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("shadowed-Rician second moment") {
  // LoS power A ~ Gamma(m, omega/m) plus scatter of per-component variance b:
  // E[h^2 | A] = A^2 + 8 A b + 8 b^2.
  constexpr int n = 1'000'000;
  const ShadowedRician s{0.126, 10.1, 0.835};
  CounterRng rng = StreamFamily(3, "fading").at(0);
  double m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double h = sample_fading(s, rng);
    m2 += h * h;
  }
  const double ea2 = s.omega * s.omega * (1.0 + 1.0 / s.m);
  const double expected = ea2 + 8.0 * s.b * s.omega + 8.0 * s.b * s.b;
  CHECK(m2 / n == doctest::Approx(expected).epsilon(0.01));
}

TEST_CASE("fading parameter validation") {
  CHECK_THROWS(validate(FadingSpec{Nakagami{0.4, 1.0}}));
  CHECK_THROWS(validate(FadingSpec{Nakagami{3.0, 0.0}}));
  CHECK_THROWS(validate(FadingSpec{ShadowedRician{0.0, 10.1, 0.835}}));
  CHECK_NOTHROW(validate(FadingSpec{ShadowedRician{}}));
}

TEST_CASE("SINR of equal-power serving, interferer and noise") {
  RadioParams r;
  r.tx_power_dbw = 0.0;
  const double d = 1.0;
  NoiseSpec noise;
  // Choose the noise PSD so noise power equals the received power.
  noise.psd_dbm_hz = mean_rx_power_dbw(r, d) + 30.0 - 10.0 * std::log10(r.bandwidth_hz);
  const Link serving{&r, d, 1.0};
  const Link interferer{&r, d, 1.0};
  CHECK(sinr_db(serving, std::span(&interferer, 1), noise, LinkMode::sinr) == doctest::Approx(-3.0103).epsilon(1e-4));
  CHECK(sinr_db(serving, std::span(&interferer, 1), noise, LinkMode::snr) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("SINR matches a linear-domain oracle") {
  std::mt19937_64 g(4);
  std::uniform_real_distribution<double> dist(0.05, 3000.0), gain(0.01, 3.0), power(-5.0, 20.0);
  const NoiseSpec noise;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RadioParams> radios(6);
    for (auto& r : radios) r.tx_power_dbw = power(g);
    std::vector<Link> links;
    for (auto& r : radios) links.push_back({&r, dist(g), gain(g)});
    double interference_w = 0.0;
    for (std::size_t i = 1; i < links.size(); ++i) {
      const double loss = friis_loss_db(links[i].distance_km * 1e3, 2e9);
      interference_w += std::pow(10.0, (radios[i].tx_power_dbw - loss) / 10.0) * links[i].fading_gain;
    }
    const double signal_w =
        std::pow(10.0, (radios[0].tx_power_dbw - friis_loss_db(links[0].distance_km * 1e3, 2e9)) / 10.0) *
        links[0].fading_gain;
    const double noise_w = std::pow(10.0, (-174.0 - 30.0) / 10.0) * 20e6;
    const double expected = 10.0 * std::log10(signal_w / (interference_w + noise_w));
    const auto rest = std::span(links).subspan(1);
    REQUIRE(sinr_db(links[0], rest, noise, LinkMode::sinr) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("dB conversions") {
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
  CHECK(linear_to_db(100.0) == doctest::Approx(20.0));
  CHECK(linear_to_db(db_to_linear(-37.5)) == doctest::Approx(-37.5));
}
