// Command-line front end: loads a config, runs one experiment or a sweep and
// writes the CSV bundles described in the README.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ofdma/channel.hpp"
#include "ofdma/engine.hpp"
#include "ofdma/error.hpp"
#include "ofdma/format.hpp"
#include "ofdma/io.hpp"

namespace {

std::string run_suffix(bool tagged, ofdma::Policy policy, int m, std::uint64_t seed) {
  if (!tagged) return "";
  return "_" + ofdma::to_string(policy) + "_m" + std::to_string(m) + "_s" +
         std::to_string(seed);
}

void print_summary_row(const ofdma::ExperimentResult& result) {
  const ofdma::RateVector& means = result.final_window_means();
  std::printf("%-12s %4d %6llu %12s %8s %6d %9.3f\n",
              ofdma::to_string(result.policy).c_str(),
              result.config_echo.window_frames,
              static_cast<unsigned long long>(result.seed),
              ofdma::format_sig9(ofdma::qos_deviation(means, result.qos_echo)).c_str(),
              ofdma::format_sig9(ofdma::jain_index(means)).c_str(),
              result.total_fallback_events(), result.wall_clock_s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic multi-user OFDMA downlink allocation simulator"};

  std::string config_path;
  std::vector<std::string> policy_names{"ltpf"};
  std::vector<int> m_values;
  int windows_override = -1;
  std::vector<std::uint64_t> seeds;
  bool sweep = false;
  std::string out_dir = "results";
  bool dump_gains = false;

  app.add_option("--config", config_path, "key=value config file")->required();
  app.add_option("--policy", policy_names,
                 "ltpf | pf-greedy | max-rate | round-robin | pf-optimal "
                 "(repeatable with --sweep)");
  app.add_option("--m", m_values, "window size in frames (repeatable with --sweep)");
  app.add_option("--windows", windows_override, "number of windows to simulate");
  app.add_option("--seed", seeds, "RNG seed (repeatable)");
  app.add_flag("--sweep", sweep, "run the cartesian product of policies, m and seeds");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--dump-gains", dump_gains, "also write the per-frame gain trace");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    auto [cfg, qos] = ofdma::load_config(config_path);
    if (!sweep) {
      if (policy_names.size() > 1 || m_values.size() > 1) {
        std::cerr << "error: multiple --policy/--m values need --sweep\n";
        return 2;
      }
      if (!m_values.empty()) cfg.window_frames = m_values.front();
    }
    if (windows_override > 0) cfg.num_windows = windows_override;
    if (seeds.empty()) seeds.push_back(cfg.rng_seed);

    if (qos.min_rates_bps.size() == 0) {
      // No profile in the config: derive the documented default from a
      // max-rate calibration pre-run on the first seed.
      ofdma::QoSProfile placeholder;
      placeholder.min_rates_bps = ofdma::RateVector::Ones(cfg.num_users);
      ofdma::SimConfig calibrated = ofdma::validate_config(cfg, placeholder);
      qos = ofdma::default_qos_profile(calibrated, seeds.front());
    }

    std::vector<ofdma::Policy> policies;
    for (const std::string& name : policy_names) {
      policies.push_back(ofdma::policy_from_string(name));
    }

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);

    std::printf("%-12s %4s %6s %12s %8s %6s %9s\n", "policy", "m", "seed", "qos_dev",
                "jain", "fallb", "wall_s");

    if (sweep) {
      if (m_values.empty()) m_values.push_back(cfg.window_frames);
      const auto results = ofdma::run_sweep(cfg, qos, policies, m_values, seeds);
      for (const auto& result : results) {
        print_summary_row(result);
        ofdma::write_output_bundle(
            dir, result,
            run_suffix(true, result.policy, result.config_echo.window_frames,
                       result.seed));
      }
      ofdma::emit_fig_bundle(dir, results, policies, m_values, seeds);
      if (dump_gains) {
        // The gain sequence depends on the seed only, so one trace per seed
        // covers every cell of the sweep.
        const ofdma::SimConfig validated = ofdma::validate_config(cfg, qos);
        const int total_frames = validated.total_frames();
        for (const std::uint64_t seed : seeds) {
          std::ofstream trace(dir / ("gains_s" + std::to_string(seed) + ".csv"),
                              std::ios::binary);
          trace << "frame,user,subcarrier,gain\n";
          ofdma::ChannelProcess channel(validated, seed);
          for (int t = 0; t < total_frames; ++t) {
            const ofdma::GainMatrix gains = channel.step();
            for (int k = 0; k < validated.num_users; ++k) {
              for (int n = 0; n < validated.num_subcarriers; ++n) {
                trace << t << ',' << k << ',' << n << ','
                      << ofdma::format_sig9(gains(k, n)) << '\n';
              }
            }
          }
        }
      }
    } else {
      const bool tagged = seeds.size() > 1;
      for (const std::uint64_t seed : seeds) {
        std::ofstream trace;
        if (dump_gains) {
          const auto path =
              dir / ("gains" +
                     run_suffix(tagged, policies.front(), cfg.window_frames, seed) +
                     ".csv");
          trace.open(path, std::ios::binary);
          if (!trace) {
            throw ofdma::Error(ofdma::Errc::io_error,
                               "cannot open for writing: " + path.string());
          }
          trace << "frame,user,subcarrier,gain\n";
        }
        const auto result = ofdma::run_experiment(cfg, qos, policies.front(), seed,
                                                  dump_gains ? &trace : nullptr);
        print_summary_row(result);
        ofdma::write_output_bundle(
            dir, result, run_suffix(tagged, result.policy,
                                    result.config_echo.window_frames, seed));
      }
    }
  } catch (const ofdma::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
