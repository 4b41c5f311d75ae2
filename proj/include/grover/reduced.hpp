#pragma once

// Exact low-dimensional models of the Grover dynamics.
//
// With marked basis vectors |w_1>..|w_l> and |r> the normalised uniform
// superposition of the unmarked ones, the span L~ = span{|w_i>, |r>} is
// invariant under both I_s and U. Inside it the uniform-marked direction
// |w~> = l^{-1/2} sum |w_i> together with |r> spans a plane on which U is a
// rotation by theta:
//
//   U = [ cos(theta)  sin(theta) ]    cos(theta) = (N - 2l) / N
//       [-sin(theta)  cos(theta) ]    sin(theta) = 2 sqrt(l (N - l)) / N
//
// and U^m |s> = cos(m theta - alpha) |w~> - sin(m theta - alpha) |r>, with
// cos(alpha) = sqrt(l / N).

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include <Eigen/Core>

#include "grover/error.hpp"
#include "grover/fullsim.hpp"
#include "grover/instance.hpp"

namespace grover {

struct SpectralAngles {
  double theta = 0.0;
  double alpha = 0.0;
  Index n = 0;
  Index ell = 0;
};

/// theta from the two-argument arctangent of (sin, cos), which stays on the
/// right branch for l > N/2 where cos(theta) < 0. alpha = arccos(sqrt(l/N)),
/// evaluated as atan2(sqrt(N - l), sqrt(l)) for conditioning near l = N.
/// Throws SizeTooSmall (n < 2) or EllOutOfRange.
SpectralAngles spectral_angles(Index n, Index ell);

inline SpectralAngles spectral_angles(const SearchInstance &inst) {
  return spectral_angles(inst.n(), inst.ell());
}

template <typename Scalar>
using Rotation2 = Eigen::Matrix<Scalar, 2, 2>;

template <typename Scalar = double>
Rotation2<Scalar> rotation(Scalar angle) {
  using std::cos;
  using std::sin;
  Rotation2<Scalar> r;
  r << cos(angle), sin(angle), -sin(angle), cos(angle);
  return r;
}

/// U on span{|w~>, |r>}.
template <typename Scalar = double>
Rotation2<Scalar> reduced_step_matrix(const SpectralAngles &angles) {
  return rotation<Scalar>(static_cast<Scalar>(angles.theta));
}

enum class RestrictedBasis {
  Diffusion, ///< I_s restricted to L~
  Grover,    ///< U = -I_s I_L restricted to L~
};

template <typename Scalar = double>
struct RestrictedMatrix {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix entries;
  RestrictedBasis basis;

  Eigen::Index order() const noexcept { return entries.rows(); }
};

/// Dense restricted matrices exist for validation; their order l + 1 is capped.
inline constexpr Index kDefaultDenseCap = 4097;

namespace detail {

inline void check_dense_cap(Index n, Index ell, Index cap) {
  if (n < 2) {
    throw Error(ErrorCode::SizeTooSmall, "database size must be at least 2");
  }
  if (ell < 1 || ell > n) {
    throw Error(ErrorCode::EllOutOfRange, "ell must lie in [1, n]");
  }
  if (ell + 1 > cap) {
    throw Error(ErrorCode::CapExceeded, "restricted matrix order " + std::to_string(ell + 1) +
                                            " exceeds the dense cap " + std::to_string(cap));
  }
}

} // namespace detail

/// I_s in the basis {|w_1>, ..., |w_l>, |r>}:
///   delta_ij - 2/N on the marked block, -2 sqrt(N - l)/N on the last row and
///   column, 2l/N - 1 in the corner.
template <typename Scalar = double>
RestrictedMatrix<Scalar> restricted_diffusion_matrix(Index n, Index ell,
                                                     Index cap = kDefaultDenseCap) {
  using std::sqrt;
  detail::check_dense_cap(n, ell, cap);
  const auto order = static_cast<Eigen::Index>(ell + 1);
  const auto l = static_cast<Eigen::Index>(ell);
  const Scalar size = static_cast<Scalar>(n);
  const Scalar coupling = -Scalar(2) * sqrt(static_cast<Scalar>(n - ell)) / size;

  RestrictedMatrix<Scalar> out{RestrictedMatrix<Scalar>::Matrix::Constant(order, order,
                                                                          -Scalar(2) / size),
                               RestrictedBasis::Diffusion};
  out.entries.topLeftCorner(l, l).diagonal().array() += Scalar(1);
  out.entries.col(l).head(l).setConstant(coupling);
  out.entries.row(l).head(l).setConstant(coupling);
  out.entries(l, l) = Scalar(2) * static_cast<Scalar>(ell) / size - Scalar(1);
  return out;
}

/// U in the basis {|w_1>, ..., |w_l>, |r>}:
///   delta_ij - 2/N on the marked block, +2 sqrt(N - l)/N in the last column,
///   -2 sqrt(N - l)/N in the last row, 1 - 2l/N in the corner.
template <typename Scalar = double>
RestrictedMatrix<Scalar> restricted_grover_matrix(Index n, Index ell,
                                                  Index cap = kDefaultDenseCap) {
  using std::sqrt;
  detail::check_dense_cap(n, ell, cap);
  const auto order = static_cast<Eigen::Index>(ell + 1);
  const auto l = static_cast<Eigen::Index>(ell);
  const Scalar size = static_cast<Scalar>(n);
  const Scalar coupling = Scalar(2) * sqrt(static_cast<Scalar>(n - ell)) / size;

  RestrictedMatrix<Scalar> out{RestrictedMatrix<Scalar>::Matrix::Constant(order, order,
                                                                          -Scalar(2) / size),
                               RestrictedBasis::Grover};
  out.entries.topLeftCorner(l, l).diagonal().array() += Scalar(1);
  out.entries.col(l).head(l).setConstant(coupling);
  out.entries.row(l).head(l).setConstant(-coupling);
  out.entries(l, l) = Scalar(1) - Scalar(2) * static_cast<Scalar>(ell) / size;
  return out;
}

/// I_L on L~: -1 on every |w_i>, +1 on |r>.
template <typename Scalar = double>
Eigen::DiagonalMatrix<Scalar, Eigen::Dynamic> restricted_oracle(Index ell) {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> d =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Constant(static_cast<Eigen::Index>(ell + 1),
                                                         Scalar(-1));
  d(static_cast<Eigen::Index>(ell)) = Scalar(1);
  return Eigen::DiagonalMatrix<Scalar, Eigen::Dynamic>(d);
}

/// Columns |w~> and |r> expressed in the basis {|w_1>, ..., |w_l>, |r>}.
template <typename Scalar = double>
Eigen::Matrix<Scalar, Eigen::Dynamic, 2> plane_isometry(Index ell) {
  using std::sqrt;
  const auto l = static_cast<Eigen::Index>(ell);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 2> v =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 2>::Zero(l + 1, 2);
  v.col(0).head(l).setConstant(Scalar(1) / sqrt(static_cast<Scalar>(ell)));
  v(l, 1) = Scalar(1);
  return v;
}

/// V^T M V for the plane isometry V; for the Grover matrix this is the
/// reduced rotation.
template <typename Scalar>
Rotation2<Scalar> restrict_to_plane(const RestrictedMatrix<Scalar> &m) {
  const auto v = plane_isometry<Scalar>(static_cast<Index>(m.order() - 1));
  return v.transpose() * m.entries * v;
}

/// P_m = cos^2(m theta - alpha).
double success_probability(const SpectralAngles &angles, std::size_t m);

struct OptimalIterations {
  std::size_t m = 0;
  double p = 0.0;
};

/// The better of floor(alpha/theta) and ceil(alpha/theta) by P_m; ties go to
/// the smaller count.
OptimalIterations optimal_iterations(const SpectralAngles &angles);

/// (pi/4) sqrt(n / ell). Only meaningful for small ell / n.
double asymptotic_iterations(Index n, Index ell);

/// Closed-form counterpart of evolve().
IterationTrace predicted_trace(const SpectralAngles &angles, std::size_t m_max);

} // namespace grover
