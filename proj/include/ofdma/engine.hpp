#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ofdma/allocators.hpp"
#include "ofdma/config.hpp"
#include "ofdma/metrics.hpp"
#include "ofdma/types.hpp"

namespace ofdma {

enum class Policy { ltpf, pf_greedy, max_rate, round_robin, pf_optimal };

Policy policy_from_string(const std::string& name);
std::string to_string(Policy policy);

/// Everything one run produces: the full K x T rate matrix, one report per
/// long-term window, and an echo of the inputs for reproducibility.
struct ExperimentResult {
  Policy policy = Policy::ltpf;
  RateMatrix per_frame_rates;  // K x (window_frames * num_windows)
  std::vector<WindowReport> window_reports;
  SimConfig config_echo;
  QoSProfile qos_echo;
  std::uint64_t seed = 0;
  double wall_clock_s = 0.0;

  /// Final-window per-user means, the quantity plotted against the profile.
  const RateVector& final_window_means() const {
    return window_reports.back().mean_rate_bps;
  }
  int total_fallback_events() const;
};

/// Called once per frame with the drawn gains and the chosen allocation.
using FrameObserver =
    std::function<void(long long frame, const GainMatrix&, const Allocation&)>;

/// Runs one policy over the configured frame budget. The gain sequence is a
/// pure function of (channel config, seed), so different policies compare on
/// identical fading. An optional trace stream receives one
/// frame,user,subcarrier,gain row per drawn gain.
ExperimentResult run_experiment(const SimConfig& cfg, const QoSProfile& qos,
                                Policy policy, std::uint64_t seed,
                                std::ostream* gain_trace = nullptr,
                                const FrameObserver& observer = {});

/// Cartesian product of (policy, window size, seed) runs at a fixed total
/// frame budget of cfg.window_frames * cfg.num_windows frames, so every
/// window size sees the same fading realizations. The budget must be
/// divisible by every requested window size.
std::vector<ExperimentResult> run_sweep(const SimConfig& cfg, const QoSProfile& qos,
                                        const std::vector<Policy>& policies,
                                        const std::vector<int>& m_values,
                                        const std::vector<std::uint64_t>& seeds);

/// Heterogeneous default profile: targets linearly spaced from 0.5x to 2.0x
/// of the equal share of the mean max-rate system throughput, measured by a
/// calibration pre-run on the given seed.
QoSProfile default_qos_profile(const SimConfig& cfg, std::uint64_t seed);

}  // namespace ofdma
