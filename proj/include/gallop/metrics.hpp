#pragma once

#include "gallop/camera.hpp"
#include "gallop/observation.hpp"
#include "gallop/trajectory.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gallop {

struct ReprojectionStats {
  std::size_t count = 0;  ///< compared 2D points
  double rmse = 0;        ///< px
  double sem = 0;         ///< px, sample std of per-point errors / sqrt(count)
  bool empty = true;      ///< no overlap between estimate and ground truth
  double nrmse = 0;
  std::size_t nrmse_count = 0;     ///< points whose view has a non-degenerate bbox
  std::size_t degenerate_views = 0;  ///< (frame, camera) views with zero-area bbox
};

/// RMSE and SEM of per-point pixel errors (no NRMSE).
ReprojectionStats reprojection_stats(std::span<const double> errors);

/// Reprojects every valid estimated marker into each camera and compares it
/// with the ground-truth 2D point. Points predicted behind a camera are
/// skipped and counted in `behind`.
struct ReprojectionReport {
  ReprojectionStats overall;
  std::array<ReprojectionStats, kNumMarkers> per_marker{};
  std::size_t behind = 0;
};

ReprojectionReport reprojection_rmse(const TrajectoryEstimate& est, const ObservationSet& gt2d,
                                     const CameraRig& rig);

/// rmse / sqrt(height * width); nullopt for a zero-area box.
std::optional<double> nrmse(double rmse, double height, double width);

struct ErrorSummary {
  std::size_t count = 0;
  double median = 0;
  double mad = 0;  ///< median absolute deviation from the median
  double mean = 0;
  double max = 0;
};

ErrorSummary summarize(std::span<const double> values);

struct MarkerErrorReport {
  ErrorSummary overall;
  std::array<ErrorSummary, kNumMarkers> per_marker{};
};

/// Euclidean 3D error of every valid estimated marker against the ground
/// truth, matched by frame number.
MarkerErrorReport marker_error_3d(const TrajectoryEstimate& est, const TrajectoryEstimate& gt);

struct MethodScore {
  std::string dataset;
  Method method = Method::kTriangulation;
  ReprojectionReport reprojection;
  MarkerErrorReport error_3d;
};

struct ScoreReport {
  std::vector<MethodScore> entries;
};

nlohmann::json score_report_to_json(const ScoreReport& report);
/// One row per (dataset, method, marker) plus an "all" row per pair.
std::string score_report_csv(const ScoreReport& report);
void save_score_report(const std::filesystem::path& json_path, const std::filesystem::path& csv_path,
                       const ScoreReport& report);

}  // namespace gallop
