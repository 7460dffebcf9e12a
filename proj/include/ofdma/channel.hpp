#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "ofdma/config.hpp"
#include "ofdma/types.hpp"

namespace ofdma {

/// Coherence time approximation 0.423 / f_D. Throws non_positive_doppler for
/// f_D <= 0 (a static channel has unbounded coherence time).
double coherence_time(double doppler_hz);

/// Clarke-model temporal correlation at one frame lag, J0(2*pi*f_D*T_f).
/// Used as the AR(1) coefficient of the fading process.
double temporal_correlation(double doppler_hz, double frame_duration_s);

/// Rayleigh block-fading generator. Holds a K x N matrix of complex Gaussian
/// coefficients advanced once per frame by a first-order Gauss-Markov
/// recursion; step() returns the amplitude matrix scaled so that
/// E[h^2] = mean_square_gain per user. The whole gain sequence is a pure
/// function of the construction arguments.
class ChannelProcess {
 public:
  /// Builds the process from a validated configuration.
  ChannelProcess(const SimConfig& cfg, std::uint64_t seed);

  /// Direct construction, mainly for tests that pin the AR coefficient.
  ChannelProcess(int num_users, int num_subcarriers, double ar_coeff,
                 RateVector mean_square_gain, double freq_correlation,
                 std::uint64_t seed);

  /// Advances every coefficient by c <- a*c + sqrt(1-a^2)*w and returns the
  /// calibrated amplitude matrix. Marginals are Rayleigh.
  GainMatrix step();

  int num_users() const { return static_cast<int>(state_.rows()); }
  int num_subcarriers() const { return static_cast<int>(state_.cols()); }
  double ar_coeff() const { return ar_coeff_; }
  const Eigen::ArrayXXcd& state() const { return state_; }

 private:
  Eigen::ArrayXXcd state_;
  double ar_coeff_;
  double freq_correlation_;
  RateVector amplitude_scale_;  // sqrt of per-user mean square gain
  std::mt19937_64 rng_;

  std::complex<double> draw_unit_gaussian();
  Eigen::ArrayXXcd draw_field();
  GainMatrix amplitudes() const;
};

}  // namespace ofdma
