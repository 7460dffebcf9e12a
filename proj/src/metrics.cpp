#include "ofdma/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "ofdma/error.hpp"

namespace ofdma {

WindowReport make_window_report(int window_index, const RateVector& mean_rates,
                                const QoSProfile& qos, int fallback_events) {
  if (mean_rates.size() != qos.min_rates_bps.size()) {
    throw Error(Errc::length_mismatch, "mean rates and QoS profile differ in length");
  }
  WindowReport report;
  report.window_index = window_index;
  report.mean_rate_bps = mean_rates;
  report.qos_gap_bps = qos.min_rates_bps - mean_rates;
  report.satisfied = report.qos_gap_bps <= 0.0;
  report.fallback_events = fallback_events;
  return report;
}

double qos_deviation(const RateVector& mean_rates, const QoSProfile& qos) {
  if (mean_rates.size() != qos.min_rates_bps.size()) {
    throw Error(Errc::length_mismatch, "mean rates and QoS profile differ in length");
  }
  return ((qos.min_rates_bps - mean_rates).abs() / qos.min_rates_bps).mean();
}

double log_pf_objective(const RateVector& mean_rates) {
  if (!(mean_rates > 0.0).all()) {
    throw Error(Errc::non_positive_rate, "log objective needs strictly positive rates");
  }
  return mean_rates.log().sum();
}

double jain_index(const RateVector& mean_rates) {
  const double sum = mean_rates.sum();
  const double sum_sq = mean_rates.square().sum();
  if (sum_sq == 0.0 || mean_rates.size() == 0) {
    throw Error(Errc::all_zero, "Jain index undefined for an all-zero vector");
  }
  return sum * sum / (mean_rates.size() * sum_sq);
}

std::vector<std::pair<double, double>> empirical_cdf(const RateVector& values) {
  if (values.size() == 0) {
    throw Error(Errc::empty_input, "empirical_cdf needs at least one value");
  }
  std::vector<double> sorted(values.data(), values.data() + values.size());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> cdf;
  const double total = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    cdf.emplace_back(sorted[i], static_cast<double>(i + 1) / total);
  }
  return cdf;
}

std::vector<bool> convergence_check(const std::vector<RateVector>& window_means,
                                    const QoSProfile& qos, double epsilon) {
  if (window_means.empty()) {
    throw Error(Errc::empty_input, "convergence_check needs at least one window");
  }
  const RateVector& final_means = window_means.back();
  if (final_means.size() != qos.min_rates_bps.size()) {
    throw Error(Errc::length_mismatch, "window means and QoS profile differ in length");
  }
  std::vector<bool> converged(static_cast<std::size_t>(final_means.size()));
  for (Eigen::Index k = 0; k < final_means.size(); ++k) {
    const double gamma = qos.min_rates_bps[k];
    converged[static_cast<std::size_t>(k)] =
        std::abs(gamma - final_means[k]) / gamma <= epsilon;
  }
  return converged;
}

RateMatrix windowed_variance_scaling(const RateMatrix& per_frame_rates,
                                     const std::vector<int>& window_sizes) {
  const Eigen::Index num_users = per_frame_rates.rows();
  const Eigen::Index num_frames = per_frame_rates.cols();
  RateMatrix stds(num_users, static_cast<Eigen::Index>(window_sizes.size()));
  for (std::size_t mi = 0; mi < window_sizes.size(); ++mi) {
    const int m = window_sizes[mi];
    if (m < 1 || num_frames % m != 0) {
      throw Error(Errc::bad_partition,
                  "frame count must be divisible by every window size");
    }
    const Eigen::Index num_windows = num_frames / m;
    RateMatrix means(num_users, num_windows);
    for (Eigen::Index w = 0; w < num_windows; ++w) {
      means.col(w) = per_frame_rates.middleCols(w * m, m).rowwise().mean();
    }
    for (Eigen::Index k = 0; k < num_users; ++k) {
      if (num_windows < 2) {
        stds(k, static_cast<Eigen::Index>(mi)) = 0.0;  // single window, by convention
        continue;
      }
      const double mean = means.row(k).mean();
      const double ss = (means.row(k) - mean).square().sum();
      stds(k, static_cast<Eigen::Index>(mi)) =
          std::sqrt(ss / static_cast<double>(num_windows - 1));
    }
  }
  return stds;
}

}  // namespace ofdma
