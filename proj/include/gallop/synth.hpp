#pragma once

#include "gallop/camera.hpp"
#include "gallop/observation.hpp"
#include "gallop/skeleton.hpp"
#include "gallop/trajectory.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gallop {

/// Gallop-like motion: the root travels along +x at `speed`; every joint
/// follows a sinusoid whose phase advances one cycle per `stride_length`
/// metres travelled, so a zero speed gives a static pose.
struct GaitProfile {
  double speed = 6.0;          ///< m/s
  double stride_length = 2.4;  ///< m (0.4 s strides at the default speed)
  double start_x = -2.5;       ///< m
  double height = 0.6;         ///< head height, m
  double amplitude = 1.0;      ///< scales every oscillation

  static GaitProfile stationary() {
    GaitProfile p;
    p.speed = 0;
    return p;
  }
};

struct SimRun {
  std::vector<Pose> poses;
  std::vector<MarkerCloud> markers;
  ObservationSet clean;  ///< exact projections of in-view markers, likelihood 1
  CameraRig rig;
};

struct CorruptionParams {
  double sigma_n = 0;  ///< px, per coordinate
  double p_o = 0;      ///< probability a 2D point becomes an outlier
  double sigma_o = 0;  ///< px, per coordinate
  std::uint64_t seed = 0;
  double outlier_likelihood = 1.0;

  void validate() const;
};

/// Six fisheye cameras (2704 x 1520, 120 Hz) in two rows of three on either
/// side of the track, 6 m apart along the track and 12 m across it.
CameraRig synthetic_rig();

Pose gait_pose(const GaitProfile& profile, double t);

/// Throws ValidationError if any generated pose violates the joint bounds.
SimRun generate_run(const SkeletonModel& model, const CameraRig& rig, int frames,
                    const GaitProfile& profile = {});

/// Exact projections of every marker that lies in front of and inside the
/// image of each camera.
ObservationSet project_markers(const std::vector<MarkerCloud>& markers, const CameraRig& rig,
                               int first_frame = 0);

/// c_noisy = c + n (+ o for outliers), with n ~ N(0, sigma_n^2) per coordinate
/// and, with probability p_o per 2D point, o ~ N(0, sigma_o^2) per coordinate.
/// Each (frame, camera, marker) draws from its own stream derived from the
/// seed, so the result does not depend on iteration order.
ObservationSet corrupt(const ObservationSet& clean, const CorruptionParams& params,
                       int* outlier_count = nullptr);

struct Dataset {
  std::string name;
  CorruptionParams corruption;
};

/// sigma_n in {0, 5, 10} x p_o in {0, 0.02, 0.05}, sigma_o = 100 px.
std::vector<Dataset> default_grid(std::uint64_t seed);
std::string dataset_name(const CorruptionParams& p);

TrajectoryEstimate ground_truth_trajectory(const SimRun& run, const SkeletonModel& model);

}  // namespace gallop
