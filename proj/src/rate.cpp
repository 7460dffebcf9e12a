#include "ofdma/rate.hpp"

#include <cmath>

namespace ofdma {

double snr_gap(double target_ber) {
  if (!(target_ber > 0.0) || !(target_ber < 0.2)) {
    throw Error(Errc::ber_out_of_range, "target BER must lie in (0, 0.2)");
  }
  return -std::log(5.0 * target_ber) / 1.6;
}

double subcarrier_rate(double gain, const RateModel& model) {
  if (!(gain >= 0.0) || !std::isfinite(gain)) {
    throw Error(Errc::negative_gain, "gain must be nonnegative and finite");
  }
  const double snr = gain * gain * model.per_subcarrier_power_w /
                     (model.noise_density_w_per_hz * model.subcarrier_bw_hz * model.snr_gap);
  return model.subcarrier_bw_hz * std::log2(1.0 + snr);
}

RateMatrix rate_matrix(const GainMatrix& gains, const RateModel& model) {
  if (!((gains >= 0.0).all() && gains.isFinite().all())) {
    throw Error(Errc::negative_gain, "all gains must be nonnegative and finite");
  }
  return subcarrier_rates(gains, model);
}

double user_frame_rate(const Eigen::Ref<const GainRow>& user_gains,
                       const Allocation& alloc, const RateModel& model, int user) {
  double total = 0.0;
  for (Eigen::Index n = 0; n < alloc.num_subcarriers(); ++n) {
    if (alloc.owner[n] == user) total += subcarrier_rate(user_gains[n], model);
  }
  return total;
}

RateVector frame_rates(const GainMatrix& gains, const Allocation& alloc,
                       const RateModel& model) {
  RateVector rates = RateVector::Zero(gains.rows());
  for (Eigen::Index n = 0; n < alloc.num_subcarriers(); ++n) {
    const int k = alloc.owner[n];
    if (k == Allocation::kUnassigned) continue;
    rates[k] += subcarrier_rate(gains(k, n), model);
  }
  return rates;
}

namespace {

// Exact for M <= 30 (C(59,30) still fits 64 bits); lgamma beyond that.
double central_binomial_2m1_m(int m) {
  if (m <= 30) {
    unsigned long long value = 1;
    // C(2M-1, M) via the multiplicative formula for C(n, k), k = M-1.
    const int n = 2 * m - 1;
    const int k = m - 1;
    for (int i = 1; i <= k; ++i) {
      value = value * static_cast<unsigned long long>(n - k + i) /
              static_cast<unsigned long long>(i);
    }
    return static_cast<double>(value);
  }
  const double logc = std::lgamma(2.0 * m) - std::lgamma(m + 1.0) - std::lgamma(static_cast<double>(m));
  return std::exp(logc);
}

}  // namespace

double diversity_error_bound(int branches, double snr) {
  if (branches < 1) {
    throw Error(Errc::bad_branch_count, "diversity branches must be >= 1");
  }
  if (!(snr > 0.0)) {
    throw Error(Errc::non_positive_snr, "snr must be > 0");
  }
  return central_binomial_2m1_m(branches) / std::pow(4.0 * snr, branches);
}

}  // namespace ofdma
