#include "ofdma/allocators.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ofdma/error.hpp"

namespace ofdma {

namespace {

// Argmax down a column, ties to the lowest user index.
int argmax_user(const Eigen::Ref<const RateVector>& scores) {
  int best = 0;
  for (int k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best;
}

}  // namespace

Allocation allocate_max_rate(const GainMatrix& gains, const RateModel& model) {
  const RateMatrix rates = rate_matrix(gains, model);
  Allocation alloc(gains.cols());
  for (Eigen::Index n = 0; n < rates.cols(); ++n) {
    alloc.owner[n] = argmax_user(rates.col(n));
  }
  return alloc;
}

Allocation allocate_round_robin(long long frame_index, int num_users,
                                int num_subcarriers) {
  Allocation alloc(num_subcarriers);
  for (int n = 0; n < num_subcarriers; ++n) {
    alloc.owner[n] = static_cast<int>(
        (n + frame_index * static_cast<long long>(num_subcarriers)) % num_users);
  }
  return alloc;
}

FrameOutcome allocate_pf_greedy(const GainMatrix& gains, const AllocatorState& state,
                                const RateModel& model) {
  const RateMatrix rates = rate_matrix(gains, model);
  const RateMatrix ratios = rates.colwise() / state.running_mean_bps;
  FrameOutcome out;
  out.allocation = Allocation(gains.cols());
  for (Eigen::Index n = 0; n < ratios.cols(); ++n) {
    out.allocation.owner[n] = argmax_user(ratios.col(n));
  }
  out.per_user_rate_bps = frame_rates(gains, out.allocation, model);
  out.per_user_pfi = out.per_user_rate_bps / state.running_mean_bps;
  return out;
}

void update_pf_mean(AllocatorState& state, const RateVector& last_frame_rates,
                    int pf_window) {
  if (pf_window < 1) {
    throw Error(Errc::bad_window, "pf_window must be >= 1");
  }
  const double alpha = 1.0 / pf_window;
  state.running_mean_bps =
      ((1.0 - alpha) * state.running_mean_bps + alpha * last_frame_rates)
          .max(state.psi_floor);
  state.total_cumulative_bps += last_frame_rates;
}

double pf_product_metric(const Allocation& alloc, const GainMatrix& gains,
                         const AllocatorState& state, int pf_window,
                         const RateModel& model) {
  if (pf_window < 2) {
    throw Error(Errc::bad_window, "pf_product_metric needs pf_window >= 2");
  }
  const RateVector rates = frame_rates(gains, alloc, model);
  return (1.0 + rates / ((pf_window - 1) * state.running_mean_bps)).prod();
}

Allocation allocate_pf_optimal_bruteforce(const GainMatrix& gains,
                                          const AllocatorState& state, int pf_window,
                                          const RateModel& model) {
  if (pf_window < 2) {
    throw Error(Errc::bad_window, "pf_product_metric needs pf_window >= 2");
  }
  const int num_users = static_cast<int>(gains.rows());
  const int num_subcarriers = static_cast<int>(gains.cols());
  double combos = 1.0;
  for (int n = 0; n < num_subcarriers && combos <= 1e6; ++n) combos *= num_users;
  if (combos > 1e6) {
    throw Error(Errc::instance_too_large,
                "brute-force enumeration is guarded to K^N <= 1e6");
  }
  const RateMatrix rates = rate_matrix(gains, model);
  const RateVector denom = (pf_window - 1) * state.running_mean_bps;

  Allocation candidate(num_subcarriers);
  candidate.owner.setZero();
  Allocation best = candidate;
  double best_metric = -1.0;
  RateVector user_rates(num_users);

  // Odometer over owner vectors with the last subcarrier least significant:
  // candidates appear in lexicographic order, so keeping strict improvements
  // leaves the lexicographically smallest maximizer.
  while (true) {
    user_rates.setZero();
    for (int n = 0; n < num_subcarriers; ++n) {
      user_rates[candidate.owner[n]] += rates(candidate.owner[n], n);
    }
    const double metric = (1.0 + user_rates / denom).prod();
    if (metric > best_metric) {
      best_metric = metric;
      best = candidate;
    }
    int n = num_subcarriers - 1;
    while (n >= 0 && candidate.owner[n] == num_users - 1) {
      candidate.owner[n] = 0;
      --n;
    }
    if (n < 0) break;
    ++candidate.owner[n];
  }
  return best;
}

std::pair<Allocation, AllocatorState> ltpf_initial_allocation(const GainMatrix& gains,
                                                              double psi,
                                                              const RateModel& model) {
  if (!(psi > 0.0)) {
    throw Error(Errc::non_positive_physical, "psi must be > 0");
  }
  const int num_users = static_cast<int>(gains.rows());
  const int num_subcarriers = static_cast<int>(gains.cols());
  const RateMatrix rates = rate_matrix(gains, model);

  RateVector working_mean = RateVector::Constant(num_users, psi);
  RateVector accumulated = RateVector::Zero(num_users);
  Allocation alloc(num_subcarriers);
  std::vector<bool> assigned(static_cast<std::size_t>(num_subcarriers), false);

  for (int round = 0; round < num_subcarriers; ++round) {
    int best_user = -1;
    int best_sub = -1;
    double best_ratio = -1.0;
    for (int k = 0; k < num_users; ++k) {
      for (int n = 0; n < num_subcarriers; ++n) {
        if (assigned[static_cast<std::size_t>(n)]) continue;
        const double ratio = rates(k, n) / working_mean[k];
        if (ratio > best_ratio) {
          best_ratio = ratio;
          best_user = k;
          best_sub = n;
        }
      }
    }
    alloc.owner[best_sub] = best_user;
    assigned[static_cast<std::size_t>(best_sub)] = true;
    accumulated[best_user] += rates(best_user, best_sub);
    working_mean[best_user] = std::max(accumulated[best_user], psi);
  }

  AllocatorState state = AllocatorState::seeded(num_users, psi);
  state.running_mean_bps = accumulated.max(psi);
  return {std::move(alloc), std::move(state)};
}

FrameOutcome ltpf_allocate_frame(const GainMatrix& gains, const AllocatorState& state,
                                 const QoSProfile& qos, const RateModel& model,
                                 FallbackPolicy fallback) {
  if (qos.min_rates_bps.size() != gains.rows()) {
    throw Error(Errc::qos_length_mismatch, "QoS profile length must equal num_users");
  }
  const int num_users = static_cast<int>(gains.rows());
  const int num_subcarriers = static_cast<int>(gains.cols());
  const RateMatrix rates = rate_matrix(gains, model);

  // A user competes while it started the frame below target and its window
  // mean including the rate accumulated this frame is still below target.
  // The ratio denominator stays the frame-start mean; only eligibility is
  // live, so the subcarrier that lifts a user to its target drops it out.
  const double window_frames_after = state.frames_in_window + 1;
  auto eligible = (state.running_mean_bps < qos.min_rates_bps).eval();
  RateVector inframe = RateVector::Zero(num_users);
  int num_eligible = static_cast<int>(eligible.count());

  FrameOutcome out;
  out.allocation = Allocation(num_subcarriers);
  std::vector<bool> assigned(static_cast<std::size_t>(num_subcarriers), false);
  int remaining = num_subcarriers;

  while (remaining > 0 && num_eligible > 0) {
    int best_user = -1;
    int best_sub = -1;
    double best_ratio = -1.0;
    for (int k = 0; k < num_users; ++k) {
      if (!eligible[k]) continue;
      for (int n = 0; n < num_subcarriers; ++n) {
        if (assigned[static_cast<std::size_t>(n)]) continue;
        const double ratio = rates(k, n) / state.running_mean_bps[k];
        if (ratio > best_ratio) {
          best_ratio = ratio;
          best_user = k;
          best_sub = n;
        }
      }
    }
    out.allocation.owner[best_sub] = best_user;
    assigned[static_cast<std::size_t>(best_sub)] = true;
    --remaining;
    inframe[best_user] += rates(best_user, best_sub);
    const double live_mean =
        (state.window_cumulative_bps[best_user] + inframe[best_user]) /
        window_frames_after;
    if (live_mean >= qos.min_rates_bps[best_user]) {
      eligible[best_user] = false;
      --num_eligible;
    }
  }

  if (remaining > 0) {
    // Every user is at target; leftover capacity goes to the fallback.
    out.used_fallback = true;
    Allocation rest;
    switch (fallback) {
      case FallbackPolicy::max_rate:
        rest = allocate_max_rate(gains, model);
        break;
      case FallbackPolicy::greedy_pf:
        rest = allocate_pf_greedy(gains, state, model).allocation;
        break;
      case FallbackPolicy::idle:
        rest = Allocation(num_subcarriers);  // all unassigned
        break;
    }
    for (int n = 0; n < num_subcarriers; ++n) {
      if (!assigned[static_cast<std::size_t>(n)]) {
        out.allocation.owner[n] = rest.owner[n];
      }
    }
  }
  out.per_user_rate_bps = frame_rates(gains, out.allocation, model);
  out.per_user_pfi = out.per_user_rate_bps / state.running_mean_bps;
  return out;
}

void update_ltpf_mean(AllocatorState& state, const RateVector& frame_rates,
                      int frame_index_in_window) {
  if (frame_index_in_window < 1) {
    throw Error(Errc::bad_window, "frame_index_in_window must be >= 1");
  }
  state.window_cumulative_bps += frame_rates;
  state.total_cumulative_bps += frame_rates;
  state.frames_in_window = frame_index_in_window;
  state.running_mean_bps =
      (state.window_cumulative_bps / state.frames_in_window).max(state.psi_floor);
}

void close_ltpf_window(AllocatorState& state) {
  // running_mean_bps already holds the floored final window mean; it seeds
  // the next window.
  state.window_cumulative_bps.setZero();
  state.frames_in_window = 0;
}

}  // namespace ofdma
