#include "ntnsim/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ntnsim/constants.hpp"

namespace ntnsim {

void validate(const FadingSpec& spec) {
  if (const auto* n = std::get_if<Nakagami>(&spec)) {
    if (!(n->m >= 0.5)) throw std::invalid_argument("Nakagami shape m must be >= 0.5");
    if (!(n->omega > 0.0)) throw std::invalid_argument("Nakagami omega must be positive");
  } else if (const auto* s = std::get_if<ShadowedRician>(&spec)) {
    if (!(s->b > 0.0 && s->m > 0.0 && s->omega > 0.0)) {
      throw std::invalid_argument("shadowed-Rician parameters b, m, omega must be positive");
    }
  }
}

void RadioParams::validate() const {
  if (!(frequency_hz > 0.0)) throw std::invalid_argument("frequency must be positive");
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  ntnsim::validate(fading);
}

double fspl_db(double distance_km, double frequency_hz) {
  if (!(distance_km > 0.0)) {
    throw std::invalid_argument("fspl_db: distance must be positive, got " + std::to_string(distance_km));
  }
  static const double k = 20.0 * std::log10(4.0 * kPi / kSpeedOfLight);
  return 20.0 * std::log10(distance_km * 1000.0) + 20.0 * std::log10(frequency_hz) + k;
}

double noise_power_dbw(const NoiseSpec& noise, double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("noise_power_dbw: bandwidth must be positive");
  return noise.psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) - 30.0;
}

double sample_fading(const FadingSpec& spec, CounterRng& rng) {
  if (const auto* n = std::get_if<Nakagami>(&spec)) {
    return gamma_variate(rng, n->m, n->omega / n->m);
  }
  if (const auto* s = std::get_if<ShadowedRician>(&spec)) {
    const double los = std::sqrt(gamma_variate(rng, s->m, s->omega / s->m));
    const double sigma = std::sqrt(s->b);
    const double re = los + sigma * standard_normal(rng);
    const double im = sigma * standard_normal(rng);
    return re * re + im * im;
  }
  return 1.0;
}

double mean_rx_power_dbw(const RadioParams& tx, double distance_km) {
  return tx.tx_power_dbw + tx.tx_gain_db + tx.rx_gain_db - fspl_db(distance_km, tx.frequency_hz);
}

double linear_to_db(double linear) {
  if (linear <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(linear);
}

double snr_db(const RadioParams& tx, double distance_km, double fading_gain, const NoiseSpec& noise) {
  if (fading_gain < 0.0) throw std::invalid_argument("snr_db: fading gain must be nonnegative");
  const double mean = mean_rx_power_dbw(tx, distance_km);
  if (fading_gain == 0.0) return -std::numeric_limits<double>::infinity();
  return mean + 10.0 * std::log10(fading_gain) - noise_power_dbw(noise, tx.bandwidth_hz);
}

double sinr_db(const Link& serving, std::span<const Link> interferers, const NoiseSpec& noise, LinkMode mode) {
  if (mode == LinkMode::snr) return snr_db(*serving.radio, serving.distance_km, serving.fading_gain, noise);
  const double signal = db_to_linear(mean_rx_power_dbw(*serving.radio, serving.distance_km)) * serving.fading_gain;
  double interference = 0.0;
  for (const Link& l : interferers) {
    interference += db_to_linear(mean_rx_power_dbw(*l.radio, l.distance_km)) * l.fading_gain;
  }
  const double n = db_to_linear(noise_power_dbw(noise, serving.radio->bandwidth_hz));
  return linear_to_db(signal / (n + interference));
}

}  // namespace ntnsim
