#pragma once

#include <stdexcept>
#include <string>

namespace ofdma {

/// Failure categories used across the library. Every throwing operation
/// documents which of these it can raise.
enum class Errc {
  bad_dimension,
  non_positive_physical,
  ber_out_of_range,
  qos_length_mismatch,
  non_positive_doppler,
  negative_gain,
  bad_branch_count,
  non_positive_snr,
  bad_window,
  instance_too_large,
  length_mismatch,
  non_positive_rate,
  all_zero,
  empty_input,
  bad_partition,
  missing_sweep_cell,
  bad_config,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ofdma
