#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "ofdma/types.hpp"

namespace ofdma {

/// Policy applied by the long-term allocator when every user already meets
/// its target and subcarriers are still unassigned.
enum class FallbackPolicy { max_rate, greedy_pf, idle };

FallbackPolicy fallback_from_string(const std::string& name);
std::string to_string(FallbackPolicy policy);

/// Per-user minimum mean data-rate targets (bit/s), length num_users.
struct QoSProfile {
  RateVector min_rates_bps;
};

/// Full simulation configuration. Physical quantities are linear SI units;
/// transmit power is entered as dBm in config files and converted at parse
/// time. Derived fields are filled by validate_config.
struct SimConfig {
  double bandwidth_hz = 0.0;          // total bandwidth B
  double total_power_w = 0.0;         // transmit power, watts after conversion
  int num_users = 0;                  // K
  int num_subcarriers = 0;            // N
  double target_ber = 0.0;            // target bit error rate
  double frame_duration_s = 0.0;      // frame length T_f
  int window_frames = 0;              // frames per long-term window (M)
  double noise_density_w_per_hz = 0.0;
  double doppler_hz = 0.0;            // maximum Doppler
  int pf_window = 0;                  // EWMA window in frames
  double psi_init = 0.0;              // running-mean seed and floor (bit/s)
  std::uint64_t rng_seed = 0;
  int num_windows = 0;                // long-term windows to simulate

  // Optional knobs.
  double freq_correlation = 0.0;      // coefficient correlation between adjacent subcarriers
  RateVector mean_square_gains;       // per-user E[h^2]; empty means all ones
  FallbackPolicy fallback = FallbackPolicy::max_rate;
  std::string modulation = "16QAM";   // metadata only; rates come from the gap model
  double channel_sampling_hz = 0.0;   // recorded, unused by the frame-sampled simulator

  // Derived, filled by validate_config.
  double subcarrier_bw_hz = 0.0;      // B / N
  double per_subcarrier_power_w = 0.0;  // P_T / N
  double snr_gap_value = 0.0;
  double ar_coeff = 0.0;              // temporal correlation at one frame lag
  bool validated = false;

  int total_frames() const { return window_frames * num_windows; }
};

double dbm_to_watts(double dbm);

/// Checks every invariant and returns the configuration with derived
/// quantities precomputed. Idempotent: validating a validated config is a
/// no-op. Throws Error with code bad_dimension, non_positive_physical,
/// ber_out_of_range or qos_length_mismatch.
SimConfig validate_config(SimConfig cfg, const QoSProfile& qos);

/// Parses the flat key=value config format ('#' starts a comment). The
/// qos_profile key holds num_users comma-separated rates in bit/s and may be
/// omitted, in which case the returned profile is empty and the caller is
/// expected to generate one. Unknown and duplicate keys are errors.
std::pair<SimConfig, QoSProfile> parse_config(std::istream& in);
std::pair<SimConfig, QoSProfile> load_config(const std::string& path);

}  // namespace ofdma
