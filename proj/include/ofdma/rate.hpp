#pragma once

#include "ofdma/config.hpp"
#include "ofdma/error.hpp"
#include "ofdma/types.hpp"

namespace ofdma {

/// SNR gap of the capacity formula at a target BER: -ln(5*BER)/1.6.
/// Strictly positive on the accepted range (0, 0.2).
double snr_gap(double target_ber);

/// Everything needed to turn an amplitude gain into an achievable rate.
struct RateModel {
  double subcarrier_bw_hz = 0.0;        // per-subcarrier bandwidth
  double per_subcarrier_power_w = 0.0;  // equal power split across subcarriers
  double noise_density_w_per_hz = 0.0;
  double snr_gap = 0.0;                 // > 0

  static RateModel from_config(const SimConfig& cfg) {
    return {cfg.subcarrier_bw_hz, cfg.per_subcarrier_power_w,
            cfg.noise_density_w_per_hz, cfg.snr_gap_value};
  }
};

/// Achievable rate on one subcarrier, bit/s:
///   bw * log2(1 + h^2 * P / (N_t * bw * gap)).
/// The gap divides the SNR inside the logarithm (the standard gap
/// approximation), so a larger gap always lowers the rate.
double subcarrier_rate(double gain, const RateModel& model);

/// Elementwise subcarrier_rate over any Eigen array expression of gains.
/// Precondition (unchecked here): all entries nonnegative and finite.
template <class Derived>
auto subcarrier_rates(const Eigen::ArrayBase<Derived>& gains, const RateModel& model) {
  const double snr_per_gain =
      model.per_subcarrier_power_w /
      (model.noise_density_w_per_hz * model.subcarrier_bw_hz * model.snr_gap);
  return model.subcarrier_bw_hz * (1.0 + gains.square() * snr_per_gain).log2();
}

/// K x N matrix of per-subcarrier rates. Throws negative_gain if any entry
/// is negative or non-finite.
RateMatrix rate_matrix(const GainMatrix& gains, const RateModel& model);

/// Sum of subcarrier rates over exactly the subcarriers owned by `user`;
/// zero if the user owns none.
double user_frame_rate(const Eigen::Ref<const GainRow>& user_gains,
                       const Allocation& alloc, const RateModel& model, int user);

/// Per-user frame rates for a whole allocation in one pass.
RateVector frame_rates(const GainMatrix& gains, const Allocation& alloc,
                       const RateModel& model);

/// Asymptotic time-diversity error bound C(2M-1, M) / (4*snr)^M. May exceed
/// one at low SNR; callers treat it as a bound, not a probability.
double diversity_error_bound(int branches, double snr);

}  // namespace ofdma
