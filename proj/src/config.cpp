#include "ofdma/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "ofdma/channel.hpp"
#include "ofdma/error.hpp"
#include "ofdma/rate.hpp"

namespace ofdma {

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

FallbackPolicy fallback_from_string(const std::string& name) {
  if (name == "max-rate") return FallbackPolicy::max_rate;
  if (name == "greedy-pf") return FallbackPolicy::greedy_pf;
  if (name == "idle") return FallbackPolicy::idle;
  throw Error(Errc::bad_config, "unknown fallback policy: " + name);
}

std::string to_string(FallbackPolicy policy) {
  switch (policy) {
    case FallbackPolicy::max_rate: return "max-rate";
    case FallbackPolicy::greedy_pf: return "greedy-pf";
    case FallbackPolicy::idle: return "idle";
  }
  return "?";
}

SimConfig validate_config(SimConfig cfg, const QoSProfile& qos) {
  if (cfg.num_users < 1 || cfg.num_subcarriers < 1 || cfg.window_frames < 1 ||
      cfg.pf_window < 1 || cfg.num_windows < 1) {
    throw Error(Errc::bad_dimension,
                "num_users, num_subcarriers, window_frames, pf_window and num_windows "
                "must all be >= 1");
  }
  if (!(cfg.bandwidth_hz > 0.0) || !(cfg.total_power_w > 0.0) ||
      !(cfg.noise_density_w_per_hz > 0.0) || !(cfg.frame_duration_s > 0.0)) {
    throw Error(Errc::non_positive_physical,
                "bandwidth, power, noise density and frame duration must be > 0");
  }
  if (!(cfg.psi_init > 0.0)) {
    throw Error(Errc::non_positive_physical, "psi_init must be > 0");
  }
  if (cfg.doppler_hz < 0.0) {
    throw Error(Errc::non_positive_physical, "doppler_hz must be >= 0");
  }
  if (!(cfg.target_ber > 0.0) || !(cfg.target_ber < 0.2)) {
    throw Error(Errc::ber_out_of_range,
                "target_ber must lie in (0, 0.2) so the SNR gap stays positive");
  }
  if (cfg.freq_correlation < 0.0 || cfg.freq_correlation >= 1.0) {
    throw Error(Errc::bad_config, "freq_correlation must lie in [0, 1)");
  }
  if (cfg.mean_square_gains.size() == 0) {
    cfg.mean_square_gains = RateVector::Ones(cfg.num_users);
  }
  if (cfg.mean_square_gains.size() != cfg.num_users) {
    throw Error(Errc::bad_config, "mean_square_gains must list one value per user");
  }
  if (!(cfg.mean_square_gains > 0.0).all()) {
    throw Error(Errc::non_positive_physical, "mean_square_gains must be > 0");
  }
  if (qos.min_rates_bps.size() != cfg.num_users) {
    throw Error(Errc::qos_length_mismatch,
                "qos_profile must list exactly num_users rates");
  }
  if (!(qos.min_rates_bps > 0.0).all()) {
    throw Error(Errc::non_positive_physical, "every QoS rate must be > 0");
  }

  cfg.subcarrier_bw_hz = cfg.bandwidth_hz / cfg.num_subcarriers;
  cfg.per_subcarrier_power_w = cfg.total_power_w / cfg.num_subcarriers;
  cfg.snr_gap_value = snr_gap(cfg.target_ber);
  cfg.ar_coeff = temporal_correlation(cfg.doppler_hz, cfg.frame_duration_s);
  cfg.validated = true;
  return cfg;
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw Error(Errc::bad_config, "key '" + key + "': not a number: '" + value + "'");
  }
  if (pos != value.size()) {
    throw Error(Errc::bad_config, "key '" + key + "': trailing junk in '" + value + "'");
  }
  return out;
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long out = 0;
  try {
    out = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw Error(Errc::bad_config, "key '" + key + "': not an integer: '" + value + "'");
  }
  if (pos != value.size()) {
    throw Error(Errc::bad_config, "key '" + key + "': trailing junk in '" + value + "'");
  }
  return out;
}

RateVector parse_rate_list(const std::string& key, const std::string& value) {
  std::vector<double> rates;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    rates.push_back(parse_double(key, trim(item)));
  }
  RateVector out(static_cast<Eigen::Index>(rates.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = rates[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace

std::pair<SimConfig, QoSProfile> parse_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(Errc::bad_config,
                  "line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(Errc::bad_config, "line " + std::to_string(lineno) + ": empty key");
    }
    if (!kv.emplace(key, value).second) {
      throw Error(Errc::bad_config, "duplicate key: " + key);
    }
  }

  SimConfig cfg;
  QoSProfile qos;
  bool have_qos = false;

  auto take = [&kv](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) {
      throw Error(Errc::bad_config, "missing required key: " + key);
    }
    std::string value = it->second;
    kv.erase(it);
    return value;
  };
  auto take_optional = [&kv](const std::string& key, std::string* out) {
    auto it = kv.find(key);
    if (it == kv.end()) return false;
    *out = it->second;
    kv.erase(it);
    return true;
  };

  cfg.bandwidth_hz = parse_double("bandwidth_hz", take("bandwidth_hz"));
  cfg.total_power_w = dbm_to_watts(parse_double("total_power_dbm", take("total_power_dbm")));
  cfg.num_users = static_cast<int>(parse_int("num_users", take("num_users")));
  cfg.num_subcarriers =
      static_cast<int>(parse_int("num_subcarriers", take("num_subcarriers")));
  cfg.target_ber = parse_double("target_ber", take("target_ber"));
  cfg.frame_duration_s = parse_double("frame_duration_s", take("frame_duration_s"));
  cfg.window_frames = static_cast<int>(parse_int("window_frames", take("window_frames")));
  cfg.noise_density_w_per_hz =
      parse_double("noise_density_w_per_hz", take("noise_density_w_per_hz"));
  cfg.doppler_hz = parse_double("doppler_hz", take("doppler_hz"));
  cfg.pf_window = static_cast<int>(parse_int("pf_window", take("pf_window")));
  cfg.psi_init = parse_double("psi_init", take("psi_init"));
  cfg.rng_seed = static_cast<std::uint64_t>(parse_int("rng_seed", take("rng_seed")));
  cfg.num_windows = static_cast<int>(parse_int("num_windows", take("num_windows")));

  std::string value;
  if (take_optional("qos_profile", &value)) {
    qos.min_rates_bps = parse_rate_list("qos_profile", value);
    have_qos = true;
  }
  if (take_optional("freq_correlation", &value)) {
    cfg.freq_correlation = parse_double("freq_correlation", value);
  }
  if (take_optional("mean_square_gains", &value)) {
    cfg.mean_square_gains = parse_rate_list("mean_square_gains", value);
  }
  if (take_optional("fallback", &value)) {
    cfg.fallback = fallback_from_string(value);
  }
  if (take_optional("modulation", &value)) {
    cfg.modulation = value;
  }
  if (take_optional("channel_sampling_hz", &value)) {
    cfg.channel_sampling_hz = parse_double("channel_sampling_hz", value);
  }

  if (!kv.empty()) {
    throw Error(Errc::bad_config, "unknown key: " + kv.begin()->first);
  }
  if (!have_qos) qos.min_rates_bps.resize(0);
  return {cfg, qos};
}

std::pair<SimConfig, QoSProfile> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::io_error, "cannot open config file: " + path);
  }
  return parse_config(in);
}

}  // namespace ofdma
