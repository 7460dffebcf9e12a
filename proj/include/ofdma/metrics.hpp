#pragma once

#include <utility>
#include <vector>

#include "ofdma/config.hpp"
#include "ofdma/types.hpp"

namespace ofdma {

/// Summary of one long-term window: per-user mean rates, their gap to the
/// QoS targets, and how often the all-satisfied fallback fired.
struct WindowReport {
  int window_index = 0;
  RateVector mean_rate_bps;
  RateVector qos_gap_bps;  // gamma_k - mean_k; satisfied iff <= 0
  Eigen::Array<bool, Eigen::Dynamic, 1> satisfied;
  int fallback_events = 0;
};

WindowReport make_window_report(int window_index, const RateVector& mean_rates,
                                const QoSProfile& qos, int fallback_events);

/// Mean absolute relative deviation of the achieved means from the targets.
double qos_deviation(const RateVector& mean_rates, const QoSProfile& qos);

/// Sum of log mean rates; throws non_positive_rate if any rate is <= 0.
double log_pf_objective(const RateVector& mean_rates);

/// Jain fairness index (sum x)^2 / (K * sum x^2), in (0, 1].
double jain_index(const RateVector& mean_rates);

/// Empirical CDF as (distinct value, cumulative fraction) points sorted
/// ascending; the last fraction is exactly 1.
std::vector<std::pair<double, double>> empirical_cdf(const RateVector& values);

/// Per-user predicate |gamma_k - mean_k| / gamma_k <= epsilon on the final
/// window of the series. 5% relative is tight enough to be visible on a
/// profile plot, hence the default.
std::vector<bool> convergence_check(const std::vector<RateVector>& window_means,
                                    const QoSProfile& qos, double epsilon = 0.05);

/// For each window size M, partitions the K x T rate series into T/M windows
/// and returns the per-user sample standard deviation of the window means as
/// column M of a K x |window_sizes| matrix. A single window yields 0 by
/// convention. Throws bad_partition when T is not divisible by some M.
RateMatrix windowed_variance_scaling(const RateMatrix& per_frame_rates,
                                     const std::vector<int>& window_sizes);

}  // namespace ofdma
