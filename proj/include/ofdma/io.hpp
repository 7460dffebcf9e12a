#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ofdma/engine.hpp"

namespace ofdma {

// CSV schemas (all files carry a header row; numeric fields are decimal with
// nine significant digits):
//   frames.csv   frame,user,rate_bps
//   windows.csv  window,user,mean_rate_bps,gamma_bps,gap_bps,satisfied
//   cdf.csv      rate_bps,fraction
//   profile CSV  user,gamma_bps,achieved_mean_bps
//   gains CSV    frame,user,subcarrier,gain
// The summary is plain key=value lines, one per metric.

void write_frames_csv(std::ostream& out, const ExperimentResult& result);
void write_windows_csv(std::ostream& out, const ExperimentResult& result);
void write_cdf_csv(std::ostream& out, const ExperimentResult& result);
void write_summary(std::ostream& out, const ExperimentResult& result);

/// Writes frames/windows/cdf/summary for one run under `dir`, with file names
/// frames<suffix>.csv etc.
void write_output_bundle(const std::filesystem::path& dir,
                         const ExperimentResult& result,
                         const std::string& suffix = "");

/// Plot-ready digest of a sweep: per (policy, window size) one profile CSV of
/// targets against achieved final-window means (averaged over seeds) and one
/// CDF CSV of the final-window user means pooled over seeds. Throws
/// missing_sweep_cell when a (policy, m, seed) combination is absent.
void emit_fig_bundle(const std::filesystem::path& dir,
                     const std::vector<ExperimentResult>& sweep,
                     const std::vector<Policy>& policies,
                     const std::vector<int>& m_values,
                     const std::vector<std::uint64_t>& seeds);

}  // namespace ofdma
