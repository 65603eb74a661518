#pragma once

#include <cmath>
#include <span>
#include <variant>

#include "ntnsim/rng.hpp"

namespace ntnsim {

struct NoFading {
  friend bool operator==(const NoFading&, const NoFading&) = default;
};

// Power gain ~ Gamma(m, omega / m).
struct Nakagami {
  double m = 3.0;
  double omega = 1.0;
  friend bool operator==(const Nakagami&, const Nakagami&) = default;
};

// |A|^2 where A is a complex Gaussian with per-component variance b plus a LoS
// term whose power is Gamma(m, omega / m).
struct ShadowedRician {
  double b = 0.126;
  double m = 10.1;
  double omega = 0.835;
  friend bool operator==(const ShadowedRician&, const ShadowedRician&) = default;
};

using FadingSpec = std::variant<NoFading, Nakagami, ShadowedRician>;

void validate(const FadingSpec& spec);

struct RadioParams {
  double tx_power_dbw = 0.0;
  double tx_gain_db = 0.0;
  double rx_gain_db = 0.0;
  double frequency_hz = 2e9;
  double bandwidth_hz = 20e6;
  FadingSpec fading = NoFading{};

  void validate() const;
  double eirp_dbw() const { return tx_power_dbw + tx_gain_db; }
  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

struct NoiseSpec {
  double psd_dbm_hz = -174.0;
  friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

double fspl_db(double distance_km, double frequency_hz);
double noise_power_dbw(const NoiseSpec& noise, double bandwidth_hz);
double sample_fading(const FadingSpec& spec, CounterRng& rng);
double mean_rx_power_dbw(const RadioParams& tx, double distance_km);

// Returns -inf when fading_gain is 0.
double snr_db(const RadioParams& tx, double distance_km, double fading_gain, const NoiseSpec& noise);

enum class LinkMode { snr, sinr };

struct Link {
  const RadioParams* radio = nullptr;
  double distance_km = 0.0;
  double fading_gain = 1.0;
};

// SNR mode ignores interferers. SINR mode sums interferer powers in the linear
// domain; noise bandwidth is the serving link's.
double sinr_db(const Link& serving, std::span<const Link> interferers, const NoiseSpec& noise, LinkMode mode);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear);

}  // namespace ntnsim
