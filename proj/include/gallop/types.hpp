#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace gallop {

inline constexpr int kNumPoseParams = 24;
inline constexpr int kNumMarkers = 20;
inline constexpr int kStateSize = 3 * kNumPoseParams;

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Generalized coordinates [x, y, z, phi_1, ..., theta_14] for one frame.
using Pose = Eigen::Matrix<double, kNumPoseParams, 1>;

/// 20 x 3 marker positions in the inertial frame, canonical marker order.
using MarkerCloud = Eigen::Matrix<double, kNumMarkers, 3, Eigen::RowMajor>;

/// d(flattened MarkerCloud) / d(pose); rows are marker-major (x, y, z).
using MarkerJacobian = Eigen::Matrix<double, 3 * kNumMarkers, kNumPoseParams>;

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace gallop
