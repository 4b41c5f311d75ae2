#pragma once

// Dense real state-vector simulation of the multi-target Grover iteration
// U = -I_s I_L. Every operator involved is real-orthogonal in the computational
// basis and the start state is real, so amplitudes are stored as real scalars.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "grover/error.hpp"
#include "grover/instance.hpp"
#include "grover/random.hpp"

namespace grover {

template <typename Scalar>
using StateVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using StateVectorXd = StateVector<double>;

/// 2^26 amplitudes, about 0.5 GB of doubles.
inline constexpr Index kDefaultMemoryCap = Index{1} << 26;

struct IterationTrace {
  /// probabilities[m] is the marked-subspace probability after m steps.
  std::vector<double> probabilities;
  std::optional<StateVectorXd> final_state;

  std::size_t m_max() const noexcept {
    return probabilities.empty() ? 0 : probabilities.size() - 1;
  }
};

namespace detail {

template <typename Derived>
void check_dimension(const Eigen::MatrixBase<Derived> &state, const SearchInstance &inst) {
  if (static_cast<Index>(state.size()) != inst.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "state has " + std::to_string(state.size()) + " amplitudes, instance has n = " +
                    std::to_string(inst.n()));
  }
}

inline void check_budget(Index n, Index memory_cap) {
  if (n > memory_cap) {
    throw Error(ErrorCode::BudgetExceeded,
                "n = " + std::to_string(n) + " exceeds the memory cap of " +
                    std::to_string(memory_cap) + " amplitudes (raise it with --memory-cap)");
  }
}

/// Pairwise summation: rounding error grows with log(n) rather than n. The
/// mean of a nearly uniform vector is otherwise biased by ~n ulps, which shows
/// up as norm drift after a few hundred steps.
template <typename Scalar>
Scalar pairwise_sum(const Eigen::Ref<const StateVector<Scalar>> &v) {
  constexpr Eigen::Index kBlock = 256;
  if (v.size() <= kBlock) return v.sum();
  const Eigen::Index half = v.size() / 2;
  return pairwise_sum<Scalar>(v.head(half)) + pairwise_sum<Scalar>(v.tail(v.size() - half));
}

} // namespace detail

/// |s>: every amplitude 1/sqrt(n).
template <typename Scalar = double>
StateVector<Scalar> uniform_state(Index n) {
  using std::sqrt;
  return StateVector<Scalar>::Constant(static_cast<Eigen::Index>(n),
                                       Scalar(1) / sqrt(static_cast<Scalar>(n)));
}

// In-place kernels. These are the hot loop; the value-returning forms below
// wrap them.

template <typename Derived>
void reflect_marked(Eigen::MatrixBase<Derived> &state, const SearchInstance &inst) {
  detail::check_dimension(state, inst);
  for (Index w : inst.marked()) {
    state(static_cast<Eigen::Index>(w)) = -state(static_cast<Eigen::Index>(w));
  }
}

template <typename Derived>
void invert_about_mean(Eigen::MatrixBase<Derived> &state) {
  using Scalar = typename Derived::Scalar;
  const Scalar twice_mean =
      Scalar(2) * detail::pairwise_sum<Scalar>(state) / static_cast<Scalar>(state.size());
  state.array() = twice_mean - state.array();
}

/// Oracle flip first, then inversion about the mean (I_L acts first in -I_s I_L).
template <typename Derived>
void grover_step_inplace(Eigen::MatrixBase<Derived> &state, const SearchInstance &inst) {
  reflect_marked(state, inst);
  invert_about_mean(state);
}

/// I_L: negates the amplitude of every marked index.
template <typename Derived>
typename Derived::PlainObject apply_oracle_reflection(const Eigen::MatrixBase<Derived> &state,
                                                      const SearchInstance &inst) {
  typename Derived::PlainObject out = state;
  reflect_marked(out, inst);
  return out;
}

/// -I_s = 2|s><s| - I: a_i -> 2 mean(a) - a_i.
template <typename Derived>
typename Derived::PlainObject apply_average_inversion(const Eigen::MatrixBase<Derived> &state) {
  typename Derived::PlainObject out = state;
  invert_about_mean(out);
  return out;
}

template <typename Derived>
typename Derived::PlainObject grover_step(const Eigen::MatrixBase<Derived> &state,
                                          const SearchInstance &inst) {
  typename Derived::PlainObject out = state;
  grover_step_inplace(out, inst);
  return out;
}

/// Probability of observing a marked index. Not clamped.
template <typename Derived>
typename Derived::Scalar marked_probability(const Eigen::MatrixBase<Derived> &state,
                                            const SearchInstance &inst) {
  detail::check_dimension(state, inst);
  typename Derived::Scalar total(0);
  for (Index w : inst.marked()) {
    const auto a = state(static_cast<Eigen::Index>(w));
    total += a * a;
  }
  return total;
}

/// Runs m_max Grover steps from |s> and records the marked probability after
/// each. No renormalisation happens along the way.
template <typename Scalar = double>
IterationTrace evolve(const SearchInstance &inst, std::size_t m_max, bool keep_final = false,
                      Index memory_cap = kDefaultMemoryCap) {
  detail::check_budget(inst.n(), memory_cap);
  StateVector<Scalar> state = uniform_state<Scalar>(inst.n());
  IterationTrace trace;
  trace.probabilities.reserve(m_max + 1);
  trace.probabilities.push_back(static_cast<double>(marked_probability(state, inst)));
  for (std::size_t m = 1; m <= m_max; ++m) {
    grover_step_inplace(state, inst);
    trace.probabilities.push_back(static_cast<double>(marked_probability(state, inst)));
  }
  if (keep_final) trace.final_state = state.template cast<double>();
  return trace;
}

/// Inverse-CDF sampler over p(i) = a_i^2. Built once per state; draws are
/// O(log n). Bin-edge ties go to the lower index and zero-probability indices
/// are never returned.
class MeasurementSampler {
public:
  template <typename Derived>
  explicit MeasurementSampler(const Eigen::MatrixBase<Derived> &state) {
    cumulative_.reserve(static_cast<std::size_t>(state.size()));
    double running = 0.0;
    for (Eigen::Index i = 0; i < state.size(); ++i) {
      const double a = static_cast<double>(state(i));
      running += a * a;
      cumulative_.push_back(running);
    }
  }

  Index draw(SplitMix64 &rng) const {
    // u in (0, total], so the first bin with cumulative >= u has positive width.
    const double u = (1.0 - rng.uniform()) * cumulative_.back();
    const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<Index>(std::min<std::ptrdiff_t>(it - cumulative_.begin(),
                                                       std::ssize(cumulative_) - 1));
  }

  double total() const noexcept { return cumulative_.empty() ? 0.0 : cumulative_.back(); }

private:
  std::vector<double> cumulative_;
};

template <typename Derived>
std::vector<Index> sample_measurement(const Eigen::MatrixBase<Derived> &state, std::uint64_t seed,
                                      std::size_t count) {
  const MeasurementSampler sampler(state);
  SplitMix64 rng(seed);
  std::vector<Index> draws(count);
  for (auto &d : draws) d = sampler.draw(rng);
  return draws;
}

/// Largest ||U v + v|| over `trials` random unit vectors v orthogonal to every
/// marked basis vector and to |r>, i.e. zero on marked indices with unmarked
/// entries summing to zero. U acts as -I there, so the result should be at
/// rounding level. Returns 0 when fewer than two unmarked indices exist.
template <typename Scalar = double>
Scalar orthocomplement_residual(const SearchInstance &inst, std::size_t trials,
                                std::uint64_t seed, Index memory_cap = kDefaultMemoryCap) {
  if (inst.n() - inst.ell() < 2) return Scalar(0);
  detail::check_budget(inst.n(), memory_cap);
  const auto n = static_cast<Eigen::Index>(inst.n());
  const Scalar unmarked_count = static_cast<Scalar>(inst.n() - inst.ell());
  SplitMix64 rng(seed);
  Scalar worst(0);
  StateVector<Scalar> v(n);
  for (std::size_t t = 0; t < trials; ++t) {
    Scalar sum(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (inst.contains(static_cast<Index>(i))) {
        v(i) = Scalar(0);
      } else {
        v(i) = static_cast<Scalar>(rng.uniform() - 0.5);
        sum += v(i);
      }
    }
    const Scalar shift = sum / unmarked_count;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!inst.contains(static_cast<Index>(i))) v(i) -= shift;
    }
    v.normalize();
    StateVector<Scalar> image = v;
    grover_step_inplace(image, inst);
    worst = std::max<Scalar>(worst, (image + v).norm());
  }
  return worst;
}

} // namespace grover
