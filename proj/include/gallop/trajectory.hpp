#pragma once

#include "gallop/types.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gallop {

enum class Method { kTriangulation, kEkf, kFte, kGroundTruth };

std::string method_tag(Method m);  ///< "TRI", "EKF", "FTE", "GT"
Method parse_method(const std::string& tag);

struct FrameEstimate {
  std::optional<Pose> pose;  ///< absent for per-point triangulation
  std::optional<Pose> velocity;
  std::optional<Pose> acceleration;
  MarkerCloud markers = MarkerCloud::Zero();
  std::array<bool, kNumMarkers> valid{};
  std::map<std::string, double> diagnostics;

  friend bool operator==(const FrameEstimate&, const FrameEstimate&) = default;
};

/// Per-frame output of any estimator. Frame numbers are first_frame + index.
struct TrajectoryEstimate {
  Method method = Method::kTriangulation;
  double frame_rate = 0;
  int first_frame = 0;
  std::vector<FrameEstimate> frames;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> warnings;

  int num_frames() const { return static_cast<int>(frames.size()); }

  friend bool operator==(const TrajectoryEstimate&, const TrajectoryEstimate&) = default;
};

nlohmann::json trajectory_to_json(const TrajectoryEstimate& est);
TrajectoryEstimate trajectory_from_json(const nlohmann::json& doc);

void save_trajectory(const std::filesystem::path& path, const TrajectoryEstimate& est);
TrajectoryEstimate load_trajectory(const std::filesystem::path& path);

nlohmann::json pose_to_json(const Pose& q);
Pose pose_from_json(const nlohmann::json& j);

}  // namespace gallop
