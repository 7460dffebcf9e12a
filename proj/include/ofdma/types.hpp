#pragma once

#include <Eigen/Dense>

namespace ofdma {

template <typename Scalar>
using MatrixT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorT = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

/// K x N matrix of nonnegative channel amplitude gains, one row per user.
using GainMatrix = MatrixT<double>;
/// One user's row of a GainMatrix.
using GainRow = Eigen::Array<double, 1, Eigen::Dynamic>;
/// Per-user quantities (rates, means, QoS targets), length K.
using RateVector = VectorT<double>;
/// K x N per-subcarrier achievable rates.
using RateMatrix = MatrixT<double>;

/// Per-frame subcarrier ownership: owner[n] is the user index holding
/// subcarrier n. Every entry is a valid index in [0, K); the only exception
/// is the optional idle fallback of the long-term allocator, which marks
/// leftover subcarriers with kUnassigned (they carry zero rate).
struct Allocation {
  static constexpr int kUnassigned = -1;

  Eigen::VectorXi owner;

  Allocation() = default;
  explicit Allocation(Eigen::Index n) : owner(Eigen::VectorXi::Constant(n, kUnassigned)) {}

  Eigen::Index num_subcarriers() const { return owner.size(); }

  /// True when every subcarrier has exactly one owner in [0, num_users).
  bool fully_assigned(int num_users) const {
    return (owner.array() >= 0).all() && (owner.array() < num_users).all();
  }

  bool operator==(const Allocation& other) const { return owner == other.owner; }
};

}  // namespace ofdma
