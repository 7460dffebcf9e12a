#include "ofdma/engine.hpp"

#include <chrono>
#include <ostream>

#include "ofdma/channel.hpp"
#include "ofdma/error.hpp"
#include "ofdma/format.hpp"

namespace ofdma {

Policy policy_from_string(const std::string& name) {
  if (name == "ltpf") return Policy::ltpf;
  if (name == "pf-greedy") return Policy::pf_greedy;
  if (name == "max-rate") return Policy::max_rate;
  if (name == "round-robin") return Policy::round_robin;
  if (name == "pf-optimal") return Policy::pf_optimal;
  throw Error(Errc::bad_config, "unknown policy: " + name);
}

std::string to_string(Policy policy) {
  switch (policy) {
    case Policy::ltpf: return "ltpf";
    case Policy::pf_greedy: return "pf-greedy";
    case Policy::max_rate: return "max-rate";
    case Policy::round_robin: return "round-robin";
    case Policy::pf_optimal: return "pf-optimal";
  }
  return "?";
}

int ExperimentResult::total_fallback_events() const {
  int total = 0;
  for (const auto& report : window_reports) total += report.fallback_events;
  return total;
}

namespace {

void trace_gains(std::ostream* out, long long frame, const GainMatrix& gains) {
  if (out == nullptr) return;
  for (Eigen::Index k = 0; k < gains.rows(); ++k) {
    for (Eigen::Index n = 0; n < gains.cols(); ++n) {
      *out << frame << ',' << k << ',' << n << ',' << format_sig9(gains(k, n)) << '\n';
    }
  }
}

}  // namespace

ExperimentResult run_experiment(const SimConfig& raw_cfg, const QoSProfile& qos,
                                Policy policy, std::uint64_t seed,
                                std::ostream* gain_trace, const FrameObserver& observer) {
  const auto started = std::chrono::steady_clock::now();
  const SimConfig cfg = validate_config(raw_cfg, qos);
  const RateModel model = RateModel::from_config(cfg);
  const int num_users = cfg.num_users;
  const int frames_per_window = cfg.window_frames;
  const int total_frames = cfg.total_frames();

  if (policy == Policy::pf_optimal) {
    double combos = 1.0;
    for (int n = 0; n < cfg.num_subcarriers && combos <= 1e6; ++n) combos *= num_users;
    if (combos > 1e6) {
      throw Error(Errc::instance_too_large,
                  "pf-optimal is an oracle for small instances (K^N <= 1e6)");
    }
  }

  ChannelProcess channel(cfg, seed);
  AllocatorState state = AllocatorState::seeded(num_users, cfg.psi_init);

  ExperimentResult result;
  result.policy = policy;
  result.per_frame_rates.resize(num_users, total_frames);
  result.config_echo = cfg;
  result.qos_echo = qos;
  result.seed = seed;
  result.window_reports.reserve(static_cast<std::size_t>(cfg.num_windows));

  int fallback_events_in_window = 0;
  for (int t = 0; t < total_frames; ++t) {
    const GainMatrix gains = channel.step();
    trace_gains(gain_trace, t, gains);
    const int frame_in_window = t % frames_per_window;

    Allocation alloc;
    switch (policy) {
      case Policy::ltpf:
        if (t == 0) {
          auto [initial, seeded] = ltpf_initial_allocation(gains, cfg.psi_init, model);
          alloc = std::move(initial);
          state = std::move(seeded);
        } else {
          FrameOutcome outcome =
              ltpf_allocate_frame(gains, state, qos, model, cfg.fallback);
          if (outcome.used_fallback) ++fallback_events_in_window;
          alloc = std::move(outcome.allocation);
        }
        break;
      case Policy::pf_greedy:
        alloc = allocate_pf_greedy(gains, state, model).allocation;
        break;
      case Policy::pf_optimal:
        alloc = allocate_pf_optimal_bruteforce(gains, state, cfg.pf_window, model);
        break;
      case Policy::max_rate:
        alloc = allocate_max_rate(gains, model);
        break;
      case Policy::round_robin:
        alloc = allocate_round_robin(t, num_users, cfg.num_subcarriers);
        break;
    }
    const RateVector rates = frame_rates(gains, alloc, model);
    if (observer) observer(t, gains, alloc);

    switch (policy) {
      case Policy::ltpf:
        update_ltpf_mean(state, rates, frame_in_window + 1);
        break;
      case Policy::pf_greedy:
      case Policy::pf_optimal:
        update_pf_mean(state, rates, cfg.pf_window);
        break;
      default:
        break;
    }
    result.per_frame_rates.col(t) = rates;

    if (frame_in_window == frames_per_window - 1) {
      const int window = t / frames_per_window;
      const RateVector window_means =
          result.per_frame_rates.middleCols(window * frames_per_window, frames_per_window)
              .rowwise()
              .mean();
      result.window_reports.push_back(
          make_window_report(window, window_means, qos, fallback_events_in_window));
      fallback_events_in_window = 0;
      if (policy == Policy::ltpf) close_ltpf_window(state);
    }
  }
  result.wall_clock_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::vector<ExperimentResult> run_sweep(const SimConfig& cfg, const QoSProfile& qos,
                                        const std::vector<Policy>& policies,
                                        const std::vector<int>& m_values,
                                        const std::vector<std::uint64_t>& seeds) {
  if (policies.empty() || m_values.empty() || seeds.empty()) {
    throw Error(Errc::empty_input, "sweep needs at least one policy, window size and seed");
  }
  const long long budget =
      static_cast<long long>(cfg.window_frames) * cfg.num_windows;
  for (const int m : m_values) {
    if (m < 1 || budget % m != 0) {
      throw Error(Errc::bad_partition,
                  "total frame budget " + std::to_string(budget) +
                      " is not divisible by window size " + std::to_string(m));
    }
  }
  std::vector<ExperimentResult> results;
  results.reserve(policies.size() * m_values.size() * seeds.size());
  for (const Policy policy : policies) {
    for (const int m : m_values) {
      SimConfig cell = cfg;
      cell.window_frames = m;
      cell.num_windows = static_cast<int>(budget / m);
      cell.validated = false;
      for (const std::uint64_t seed : seeds) {
        results.push_back(run_experiment(cell, qos, policy, seed));
      }
    }
  }
  return results;
}

QoSProfile default_qos_profile(const SimConfig& cfg, std::uint64_t seed) {
  QoSProfile placeholder;
  placeholder.min_rates_bps = RateVector::Ones(cfg.num_users);
  const ExperimentResult calibration =
      run_experiment(cfg, placeholder, Policy::max_rate, seed);
  const double mean_system_rate =
      calibration.per_frame_rates.colwise().sum().mean();
  const double share = mean_system_rate / cfg.num_users;
  QoSProfile qos;
  if (cfg.num_users == 1) {
    qos.min_rates_bps = RateVector::Constant(1, 1.25 * share);  // midpoint
  } else {
    qos.min_rates_bps =
        RateVector::LinSpaced(cfg.num_users, 0.5 * share, 2.0 * share);
  }
  return qos;
}

}  // namespace ofdma
