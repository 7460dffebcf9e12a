#pragma once

#include <utility>

#include "ofdma/config.hpp"
#include "ofdma/rate.hpp"
#include "ofdma/types.hpp"

namespace ofdma {

/// Scheduler bookkeeping carried across frames. running_mean_bps is the
/// denominator of every fairness ratio and never drops below the psi floor,
/// so the ratios stay finite even for users that receive nothing.
struct AllocatorState {
  RateVector running_mean_bps;
  RateVector window_cumulative_bps;
  int frames_in_window = 0;
  RateVector total_cumulative_bps;
  double psi_floor = 1.0;

  static AllocatorState seeded(int num_users, double psi) {
    AllocatorState state;
    state.running_mean_bps = RateVector::Constant(num_users, psi);
    state.window_cumulative_bps = RateVector::Zero(num_users);
    state.total_cumulative_bps = RateVector::Zero(num_users);
    state.psi_floor = psi;
    return state;
  }
};

/// One frame's allocation together with the realized per-user rates and
/// fairness indices (rate over running mean at frame start).
struct FrameOutcome {
  Allocation allocation;
  RateVector per_user_rate_bps;
  RateVector per_user_pfi;
  bool used_fallback = false;
};

/// owner[n] = argmax_k rate(k, n); ties to the lowest user index.
Allocation allocate_max_rate(const GainMatrix& gains, const RateModel& model);

/// Channel-oblivious cycle: owner[n] = (n + frame_index * N) mod K.
Allocation allocate_round_robin(long long frame_index, int num_users, int num_subcarriers);

/// Per-subcarrier argmax of rate(k, n) / running_mean[k] with the running
/// means held fixed for the whole frame. Does not mutate the state; the
/// engine applies the EWMA update afterwards.
FrameOutcome allocate_pf_greedy(const GainMatrix& gains, const AllocatorState& state,
                                const RateModel& model);

/// EWMA update of the running means with window pf_window, followed by the
/// psi floor.
void update_pf_mean(AllocatorState& state, const RateVector& last_frame_rates,
                    int pf_window);

/// Product-form fairness score of a candidate allocation,
///   prod_k (1 + rate_k / ((pf_window - 1) * running_mean_k)), always >= 1.
/// Throws bad_window for pf_window < 2.
double pf_product_metric(const Allocation& alloc, const GainMatrix& gains,
                         const AllocatorState& state, int pf_window,
                         const RateModel& model);

/// Exhaustive maximizer of pf_product_metric over all K^N assignments; ties
/// go to the lexicographically smallest owner vector. Guarded to K^N <= 1e6
/// (instance_too_large beyond); this is an oracle, not a scheduler.
Allocation allocate_pf_optimal_bruteforce(const GainMatrix& gains,
                                          const AllocatorState& state, int pf_window,
                                          const RateModel& model);

/// Bootstrap allocation for the first frame of a long-term run. All working
/// means start at psi; each iteration hands the globally best
/// (user, unassigned subcarrier) ratio pair out and lifts that user's working
/// mean to its accumulated rate (floored at psi). Returns the allocation and
/// the seeded state.
std::pair<Allocation, AllocatorState> ltpf_initial_allocation(const GainMatrix& gains,
                                                              double psi,
                                                              const RateModel& model);

/// Long-term QoS-gated frame allocation. Users below their target compete
/// for subcarriers by rate over frame-start window mean; a user drops out of
/// the frame as soon as its window mean including the rate accumulated this
/// frame reaches the target. Capacity left after everyone is at target goes
/// to the fallback policy and flags the outcome.
FrameOutcome ltpf_allocate_frame(const GainMatrix& gains, const AllocatorState& state,
                                 const QoSProfile& qos, const RateModel& model,
                                 FallbackPolicy fallback = FallbackPolicy::max_rate);

/// Folds one frame into the window accumulators and refreshes the running
/// means to the window-so-far arithmetic mean, floored at psi.
void update_ltpf_mean(AllocatorState& state, const RateVector& frame_rates,
                      int frame_index_in_window);

/// Window boundary: keep the floored final window mean as the seed for the
/// next window and clear the accumulators.
void close_ltpf_window(AllocatorState& state);

}  // namespace ofdma
