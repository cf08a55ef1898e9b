#pragma once

#include "gallop/camera.hpp"
#include "gallop/observation.hpp"
#include "gallop/trajectory.hpp"

#include <optional>
#include <span>
#include <vector>

namespace gallop {

enum class PointLoss { kCauchy, kSquared };

struct TriangulationOptions {
  double likelihood_threshold = 0.5;
  double cauchy_sigma = 5.0;  ///< px
  PointLoss loss = PointLoss::kCauchy;
  int max_iterations = 100;
  double step_tolerance = 1e-10;  ///< m
  double initial_damping = 1e-3;
};

/// One camera's view of the point being triangulated.
struct PointView {
  int camera = 0;  ///< rig position
  Detection detection;
};

struct PointEstimate {
  int marker = 0;
  Vec3 position = Vec3::Zero();
  int n_views = 0;
  double residual = 0;  ///< final robust cost
  int iterations = 0;
};

/// Robust cost of a candidate point over the given views (views behind a
/// camera contribute the cost of a 1e6 px residual).
double point_cost(const Vec3& point, std::span<const PointView> views, const CameraRig& rig,
                  const TriangulationOptions& opts);

/// nullopt signals fewer than two views above the likelihood threshold.
std::optional<PointEstimate> triangulate_point(int marker, std::span<const PointView> views,
                                               const CameraRig& rig,
                                               const TriangulationOptions& opts = {});

/// Per-frame results; element [f][m] is empty when marker m could not be
/// reconstructed in frame f.
using TriangulatedFrames = std::vector<std::array<std::optional<PointEstimate>, kNumMarkers>>;

TriangulatedFrames triangulate_frames(const ObservationSet& obs, const CameraRig& rig,
                                      const TriangulationOptions& opts = {});

TrajectoryEstimate triangulate_trajectory(const ObservationSet& obs, const CameraRig& rig,
                                          const TriangulationOptions& opts = {});

}  // namespace gallop
