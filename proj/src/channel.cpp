#include "ofdma/channel.hpp"

#include <cmath>

#include "ofdma/error.hpp"

namespace ofdma {

double coherence_time(double doppler_hz) {
  if (!(doppler_hz > 0.0)) {
    throw Error(Errc::non_positive_doppler, "coherence_time requires doppler_hz > 0");
  }
  return 0.423 / doppler_hz;
}

double temporal_correlation(double doppler_hz, double frame_duration_s) {
  return std::cyl_bessel_j(0.0, 2.0 * M_PI * doppler_hz * frame_duration_s);
}

ChannelProcess::ChannelProcess(const SimConfig& cfg, std::uint64_t seed)
    : ChannelProcess(cfg.num_users, cfg.num_subcarriers, cfg.ar_coeff,
                     cfg.mean_square_gains, cfg.freq_correlation, seed) {
  if (!cfg.validated) {
    throw Error(Errc::bad_config, "ChannelProcess requires a validated config");
  }
}

ChannelProcess::ChannelProcess(int num_users, int num_subcarriers, double ar_coeff,
                               RateVector mean_square_gain, double freq_correlation,
                               std::uint64_t seed)
    : ar_coeff_(ar_coeff),
      freq_correlation_(freq_correlation),
      amplitude_scale_(mean_square_gain.sqrt()),
      rng_(seed) {
  if (num_users < 1 || num_subcarriers < 1) {
    throw Error(Errc::bad_dimension, "channel needs at least one user and subcarrier");
  }
  if (std::abs(ar_coeff_) > 1.0) {
    throw Error(Errc::bad_config, "|ar_coeff| must be <= 1");
  }
  if (mean_square_gain.size() != num_users || !(mean_square_gain > 0.0).all()) {
    throw Error(Errc::non_positive_physical,
                "mean_square_gain must hold one positive value per user");
  }
  state_.resize(num_users, num_subcarriers);
  state_ = draw_field();  // stationary start
}

// Box-Muller on explicitly mapped 53-bit uniforms; mt19937_64 output is fully
// specified, so streams are reproducible across standard libraries.
std::complex<double> ChannelProcess::draw_unit_gaussian() {
  const double u1 = 1.0 - static_cast<double>(rng_() >> 11) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;        // [0, 1)
  const double radius = std::sqrt(-2.0 * std::log(u1));
  // Unit-variance circular complex Gaussian: Re and Im are N(0, 1/2).
  const double scale = radius / std::sqrt(2.0);
  return {scale * std::cos(2.0 * M_PI * u2), scale * std::sin(2.0 * M_PI * u2)};
}

// Fresh K x N field of unit complex Gaussians, drawn user-major. With
// freq_correlation > 0 an AR(1) filter across the subcarrier axis gives
// adjacent coefficients the requested correlation while keeping unit variance.
Eigen::ArrayXXcd ChannelProcess::draw_field() {
  Eigen::ArrayXXcd field(state_.rows(), state_.cols());
  const double rho = freq_correlation_;
  const double mix = std::sqrt(1.0 - rho * rho);
  for (Eigen::Index k = 0; k < field.rows(); ++k) {
    for (Eigen::Index n = 0; n < field.cols(); ++n) {
      const std::complex<double> w = draw_unit_gaussian();
      field(k, n) = (rho > 0.0 && n > 0) ? rho * field(k, n - 1) + mix * w : w;
    }
  }
  return field;
}

GainMatrix ChannelProcess::amplitudes() const {
  GainMatrix gains = state_.abs();
  gains.colwise() *= amplitude_scale_;
  return gains;
}

GainMatrix ChannelProcess::step() {
  const double a = ar_coeff_;
  const double innovation = std::sqrt(1.0 - a * a);
  if (innovation > 0.0) {
    state_ = a * state_ + innovation * draw_field();
  }
  return amplitudes();
}

}  // namespace ofdma
