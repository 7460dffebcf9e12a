#pragma once

#include <random>

#include "ofdma/config.hpp"
#include "ofdma/rate.hpp"
#include "ofdma/types.hpp"

namespace testutil {

// Table I style baseline used across the suites.
inline ofdma::SimConfig table1_config() {
  ofdma::SimConfig cfg;
  cfg.bandwidth_hz = 1.25e6;
  cfg.total_power_w = ofdma::dbm_to_watts(20.0);
  cfg.num_users = 20;
  cfg.num_subcarriers = 72;
  cfg.target_ber = 1e-3;
  cfg.frame_duration_s = 5e-3;
  cfg.window_frames = 10;
  cfg.noise_density_w_per_hz = 8e-10;
  cfg.doppler_hz = 100.0;
  cfg.pf_window = 50;
  cfg.psi_init = 1.0;
  cfg.rng_seed = 1;
  cfg.num_windows = 10;
  return cfg;
}

inline ofdma::QoSProfile uniform_qos(int num_users, double rate) {
  ofdma::QoSProfile qos;
  qos.min_rates_bps = ofdma::RateVector::Constant(num_users, rate);
  return qos;
}

// Unit-bandwidth model: subcarrier_rate(h) == log2(1 + h^2), which makes
// hand traces exact for h^2 in {1, 3, 7, 15, ...}.
inline ofdma::RateModel unit_model() {
  return ofdma::RateModel{1.0, 1.0, 1.0, 1.0};
}

inline ofdma::GainMatrix random_gains(int num_users, int num_subcarriers,
                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  ofdma::GainMatrix gains(num_users, num_subcarriers);
  for (Eigen::Index k = 0; k < gains.rows(); ++k) {
    for (Eigen::Index n = 0; n < gains.cols(); ++n) {
      gains(k, n) = dist(rng);
    }
  }
  return gains;
}

}  // namespace testutil
