#pragma once

#include "gallop/camera.hpp"
#include "gallop/observation.hpp"
#include "gallop/skeleton.hpp"
#include "gallop/trajectory.hpp"
#include "gallop/triangulate.hpp"

#include <Eigen/Core>

#include <limits>
#include <vector>

namespace gallop {

using StateVector = Eigen::Matrix<double, kStateSize, 1>;
using StateCovariance = Eigen::Matrix<double, kStateSize, kStateSize>;

/// x = [q, q_dot, q_ddot]; P its covariance.
struct EkfState {
  StateVector x = StateVector::Zero();
  StateCovariance P = StateCovariance::Identity();

  Pose q() const { return x.segment<kNumPoseParams>(0); }
  Pose q_dot() const { return x.segment<kNumPoseParams>(kNumPoseParams); }
  Pose q_ddot() const { return x.segment<kNumPoseParams>(2 * kNumPoseParams); }
};

struct EkfConfig {
  double dt = 1.0 / 120.0;
  Pose jerk_sigma = default_jerk_sigma();  ///< per pose parameter, m/s^3 or rad/s^3
  double meas_sigma = 5.0;                 ///< px
  double low_likelihood_sigma = 2704.0;    ///< px
  double likelihood_threshold = 0.5;
  double gate_multiplier = 3.0;
  int update_iterations = 1;          ///< 1 is the standard EKF update
  int initial_update_iterations = 10;  ///< relinearizations at the first frame

  static Pose default_jerk_sigma();
  void validate() const;
};

struct EkfUpdateInfo {
  int channels = 0;        ///< stacked measurement length
  int gated_channels = 0;  ///< innovations zeroed by the gate
  int low_likelihood_channels = 0;
  bool skipped = false;    ///< singular innovation covariance
};

/// Measurement channels of one frame: camera-major, then marker, then (u, v).
struct MeasurementStack {
  std::vector<int> camera;
  std::vector<int> marker;
  Eigen::VectorXd z;
  Eigen::VectorXd variance;
  int low_likelihood = 0;
};

MeasurementStack stack_measurements(const ObservationSet& obs, int frame, const EkfConfig& cfg);

/// h(x): predicted pixels for the stacked channels. Channels whose marker is
/// behind the camera are reported through `valid`.
Eigen::VectorXd predict_measurements(const Pose& q, const MeasurementStack& stack,
                                     const CameraRig& rig, const SkeletonModel& model,
                                     std::vector<bool>* valid = nullptr);

/// dh/dx (channels x 72); columns for q_dot and q_ddot are zero.
Eigen::MatrixXd measurement_jacobian(const Pose& q, const MeasurementStack& stack,
                                     const CameraRig& rig, const SkeletonModel& model);

/// Zeroes every innovation component with |y_i| >= multiplier * sqrt(S_ii).
/// Returns the number of components zeroed.
int gate_innovation(Eigen::Ref<Eigen::VectorXd> innovation, const Eigen::VectorXd& s_diag,
                    double multiplier);

StateCovariance process_noise(const EkfConfig& cfg);
StateCovariance transition_matrix(double dt);

EkfState ekf_predict(const EkfState& state, const EkfConfig& cfg);

EkfState ekf_update(const EkfState& state, const ObservationSet& obs, int frame,
                    const CameraRig& rig, const SkeletonModel& model, const EkfConfig& cfg,
                    EkfUpdateInfo* info = nullptr, int iterations = 1);

/// Root position and heading from triangulated markers of one frame. The
/// remaining parameters are zero. Falls back to `fallback` when the head
/// markers are missing.
Pose root_pose_from_points(const SkeletonModel& model,
                           const std::array<std::optional<PointEstimate>, kNumMarkers>& points,
                           const Pose& fallback = Pose::Zero());

/// Initial state from first-frame triangulation with the default prior.
EkfState initial_state(const SkeletonModel& model, const ObservationSet& obs, const CameraRig& rig,
                       const TriangulationOptions& tri = {});

EkfState state_from_pose(const Pose& q);

TrajectoryEstimate run_ekf(const ObservationSet& obs, const CameraRig& rig,
                           const SkeletonModel& model, const EkfConfig& cfg, const EkfState& init);

}  // namespace gallop
