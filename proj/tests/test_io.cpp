#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "ofdma/engine.hpp"
#include "ofdma/error.hpp"
#include "ofdma/io.hpp"

using namespace ofdma;
namespace fs = std::filesystem;

namespace {

ExperimentResult sample_result() {
  SimConfig cfg = testutil::table1_config();
  cfg.num_users = 3;
  cfg.num_subcarriers = 5;
  cfg.window_frames = 4;
  cfg.num_windows = 2;
  return run_experiment(cfg, testutil::uniform_qos(3, 1e5), Policy::ltpf, 13);
}

long count_lines(const std::string& text) {
  return static_cast<long>(std::count(text.begin(), text.end(), '\n'));
}

}  // namespace

TEST_CASE("CSV writers carry headers and one row per entity") {
  const ExperimentResult result = sample_result();

  std::ostringstream frames;
  write_frames_csv(frames, result);
  CHECK(frames.str().rfind("frame,user,rate_bps\n", 0) == 0);
  CHECK(count_lines(frames.str()) == 1 + 3 * 8);

  std::ostringstream windows;
  write_windows_csv(windows, result);
  CHECK(windows.str().rfind("window,user,mean_rate_bps,gamma_bps,gap_bps,satisfied\n",
                            0) == 0);
  CHECK(count_lines(windows.str()) == 1 + 3 * 2);

  std::ostringstream cdf;
  write_cdf_csv(cdf, result);
  CHECK(cdf.str().rfind("rate_bps,fraction\n", 0) == 0);
  CHECK(cdf.str().back() == '\n');

  std::ostringstream summary;
  write_summary(summary, result);
  CHECK(summary.str().find("policy=ltpf\n") != std::string::npos);
  CHECK(summary.str().find("fallback_events=") != std::string::npos);
}

TEST_CASE("identical results serialize identically") {
  const ExperimentResult a = sample_result();
  const ExperimentResult b = sample_result();
  std::ostringstream out_a, out_b;
  write_frames_csv(out_a, a);
  write_frames_csv(out_b, b);
  CHECK(out_a.str() == out_b.str());
}

TEST_CASE("fig bundle emits one profile and one CDF per (policy, m)") {
  SimConfig cfg = testutil::table1_config();
  cfg.num_users = 4;
  cfg.num_subcarriers = 6;
  cfg.window_frames = 4;
  cfg.num_windows = 3;  // budget 12, divisible by 1, 2, 4
  const QoSProfile qos = testutil::uniform_qos(4, 1e5);
  const std::vector<Policy> policies{Policy::ltpf};
  const std::vector<int> m_values{1, 2, 4};
  const std::vector<std::uint64_t> seeds{1, 2};
  const auto sweep = run_sweep(cfg, qos, policies, m_values, seeds);

  const fs::path dir = fs::temp_directory_path() / "ofdma_io_test";
  fs::remove_all(dir);
  emit_fig_bundle(dir, sweep, policies, m_values, seeds);

  int profiles = 0, cdfs = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("profile_", 0) == 0) ++profiles;
    if (name.rfind("cdf_", 0) == 0) ++cdfs;
  }
  CHECK(profiles == 3);
  CHECK(cdfs == 3);

  // The gamma column echoes the profile.
  std::ifstream profile(dir / "profile_ltpf_m2.csv");
  std::string line;
  std::getline(profile, line);
  CHECK(line == "user,gamma_bps,achieved_mean_bps");
  int row = 0;
  while (std::getline(profile, line)) {
    std::stringstream ss(line);
    std::string user, gamma;
    std::getline(ss, user, ',');
    std::getline(ss, gamma, ',');
    CHECK(user == std::to_string(row));
    CHECK(std::stod(gamma) == doctest::Approx(1e5));
    ++row;
  }
  CHECK(row == 4);

  SUBCASE("a missing cell is an error") {
    CHECK_THROWS_AS(emit_fig_bundle(dir, sweep, policies, {1, 2, 4, 12}, seeds),
                    Error);
    CHECK_THROWS_AS(emit_fig_bundle(dir, sweep, {Policy::max_rate}, m_values, seeds),
                    Error);
  }
  fs::remove_all(dir);
}
