#include "ofdma/io.hpp"

#include <fstream>
#include <ostream>

#include "ofdma/error.hpp"
#include "ofdma/format.hpp"
#include "ofdma/metrics.hpp"

namespace ofdma {

void write_frames_csv(std::ostream& out, const ExperimentResult& result) {
  out << "frame,user,rate_bps\n";
  for (Eigen::Index t = 0; t < result.per_frame_rates.cols(); ++t) {
    for (Eigen::Index k = 0; k < result.per_frame_rates.rows(); ++k) {
      out << t << ',' << k << ',' << format_sig9(result.per_frame_rates(k, t)) << '\n';
    }
  }
}

void write_windows_csv(std::ostream& out, const ExperimentResult& result) {
  out << "window,user,mean_rate_bps,gamma_bps,gap_bps,satisfied\n";
  for (const WindowReport& report : result.window_reports) {
    for (Eigen::Index k = 0; k < report.mean_rate_bps.size(); ++k) {
      out << report.window_index << ',' << k << ','
          << format_sig9(report.mean_rate_bps[k]) << ','
          << format_sig9(result.qos_echo.min_rates_bps[k]) << ','
          << format_sig9(report.qos_gap_bps[k]) << ',' << (report.satisfied[k] ? 1 : 0)
          << '\n';
    }
  }
}

void write_cdf_csv(std::ostream& out, const ExperimentResult& result) {
  out << "rate_bps,fraction\n";
  for (const auto& [rate, fraction] : empirical_cdf(result.final_window_means())) {
    out << format_sig9(rate) << ',' << format_sig9(fraction) << '\n';
  }
}

void write_summary(std::ostream& out, const ExperimentResult& result) {
  const RateVector& means = result.final_window_means();
  out << "policy=" << to_string(result.policy) << '\n';
  out << "m=" << result.config_echo.window_frames << '\n';
  out << "num_windows=" << result.config_echo.num_windows << '\n';
  out << "total_frames=" << result.config_echo.total_frames() << '\n';
  out << "seed=" << result.seed << '\n';
  out << "qos_deviation=" << format_sig9(qos_deviation(means, result.qos_echo)) << '\n';
  out << "jain_index=" << format_sig9(jain_index(means)) << '\n';
  // A user can end a window with nothing; report the objective as -inf then.
  if ((means > 0.0).all()) {
    out << "log_pf_objective=" << format_sig9(log_pf_objective(means)) << '\n';
  } else {
    out << "log_pf_objective=-inf\n";
  }
  out << "fallback_events=" << result.total_fallback_events() << '\n';
  out << "wall_clock_s=" << format_sig9(result.wall_clock_s) << '\n';
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // '\n' endings on every platform
  if (!out) {
    throw Error(Errc::io_error, "cannot open for writing: " + path.string());
  }
  return out;
}

}  // namespace

void write_output_bundle(const std::filesystem::path& dir,
                         const ExperimentResult& result,
                         const std::string& suffix) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_for_write(dir / ("frames" + suffix + ".csv"));
    write_frames_csv(out, result);
  }
  {
    auto out = open_for_write(dir / ("windows" + suffix + ".csv"));
    write_windows_csv(out, result);
  }
  {
    auto out = open_for_write(dir / ("cdf" + suffix + ".csv"));
    write_cdf_csv(out, result);
  }
  {
    auto out = open_for_write(dir / ("summary" + suffix + ".txt"));
    write_summary(out, result);
  }
}

void emit_fig_bundle(const std::filesystem::path& dir,
                     const std::vector<ExperimentResult>& sweep,
                     const std::vector<Policy>& policies,
                     const std::vector<int>& m_values,
                     const std::vector<std::uint64_t>& seeds) {
  std::filesystem::create_directories(dir);
  auto find_cell = [&sweep](Policy policy, int m, std::uint64_t seed)
      -> const ExperimentResult& {
    for (const ExperimentResult& result : sweep) {
      if (result.policy == policy && result.config_echo.window_frames == m &&
          result.seed == seed) {
        return result;
      }
    }
    throw Error(Errc::missing_sweep_cell,
                "sweep is missing policy=" + to_string(policy) + " m=" +
                    std::to_string(m) + " seed=" + std::to_string(seed));
  };

  for (const Policy policy : policies) {
    for (const int m : m_values) {
      RateVector mean_over_seeds;
      std::vector<double> pooled;
      for (const std::uint64_t seed : seeds) {
        const ExperimentResult& cell = find_cell(policy, m, seed);
        const RateVector& means = cell.final_window_means();
        if (mean_over_seeds.size() == 0) {
          mean_over_seeds = RateVector::Zero(means.size());
        }
        mean_over_seeds += means;
        pooled.insert(pooled.end(), means.data(), means.data() + means.size());
      }
      mean_over_seeds /= static_cast<double>(seeds.size());
      const QoSProfile& qos =
          find_cell(policy, m, seeds.front()).qos_echo;

      const std::string tag = "_" + to_string(policy) + "_m" + std::to_string(m);
      {
        auto out = open_for_write(dir / ("profile" + tag + ".csv"));
        out << "user,gamma_bps,achieved_mean_bps\n";
        for (Eigen::Index k = 0; k < mean_over_seeds.size(); ++k) {
          out << k << ',' << format_sig9(qos.min_rates_bps[k]) << ','
              << format_sig9(mean_over_seeds[k]) << '\n';
        }
      }
      {
        auto out = open_for_write(dir / ("cdf" + tag + ".csv"));
        out << "rate_bps,fraction\n";
        RateVector pooled_vec =
            Eigen::Map<const RateVector>(pooled.data(),
                                         static_cast<Eigen::Index>(pooled.size()));
        for (const auto& [rate, fraction] : empirical_cdf(pooled_vec)) {
          out << format_sig9(rate) << ',' << format_sig9(fraction) << '\n';
        }
      }
    }
  }
}

}  // namespace ofdma
