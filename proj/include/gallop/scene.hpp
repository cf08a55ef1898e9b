#pragma once

#include "gallop/camera.hpp"
#include "gallop/metrics.hpp"
#include "gallop/observation.hpp"
#include "gallop/skeleton.hpp"
#include "gallop/trajectory.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gallop {

/// One observed channel of a frame: the 2D point the estimator was given and
/// the reprojection of the estimated marker (residual = observed - reprojected).
struct SceneResidual {
  int camera = 0;  ///< camera id
  int marker = 0;
  Vec2 observed = Vec2::Zero();
  Vec2 reprojected = Vec2::Zero();
  double likelihood = 0;

  Vec2 residual() const { return observed - reprojected; }
  friend bool operator==(const SceneResidual&, const SceneResidual&) = default;
};

struct SceneFrame {
  int frame = 0;
  std::optional<Pose> pose;
  MarkerCloud markers = MarkerCloud::Zero();
  std::array<bool, kNumMarkers> valid{};
  std::vector<SceneResidual> residuals;
  std::map<std::string, double> diagnostics;

  friend bool operator==(const SceneFrame&, const SceneFrame&) = default;
};

/// Self-contained export for inspection: skeleton, rig (with the fisheye
/// parameters), and per frame the pose, marker cloud, residuals and solver
/// diagnostics of one estimator.
struct SceneDocument {
  Method method = Method::kFte;
  std::string dataset;
  nlohmann::json skeleton;  ///< SkeletonModel::to_json plus "segments"
  CameraRig rig;
  double frame_rate = 0;
  std::vector<SceneFrame> frames;
  std::map<std::string, double> diagnostics;
  std::vector<std::string> warnings;

  friend bool operator==(const SceneDocument&, const SceneDocument&) = default;
};

/// Marker pairs to draw: every rigid anchor link, plus all pairs among the
/// markers hanging directly off the root.
std::vector<std::pair<int, int>> scene_segments(const SkeletonModel& model);

SceneDocument build_scene(const TrajectoryEstimate& est, const ObservationSet& obs,
                          const CameraRig& rig, const SkeletonModel& model,
                          const std::string& dataset = "");

nlohmann::json scene_to_json(const SceneDocument& doc);
/// Throws ParseError naming the offending field.
SceneDocument scene_from_json(const nlohmann::json& j);

void export_scene(const std::filesystem::path& path, const TrajectoryEstimate& est,
                  const ObservationSet& obs, const CameraRig& rig, const SkeletonModel& model,
                  const std::string& dataset = "");
SceneDocument load_scene(const std::filesystem::path& path);

/// Reprojection statistics recomputed from the residuals stored in the scene.
ReprojectionStats scene_reprojection(const SceneDocument& doc);

/// A manual adjustment of one marker in one frame.
struct CorrectionRecord {
  int frame = 0;
  std::string marker;
  Vec3 original = Vec3::Zero();   ///< m
  Vec3 corrected = Vec3::Zero();  ///< m
  std::string author;
  std::string timestamp;  ///< ISO 8601

  double magnitude() const { return (corrected - original).norm(); }
  friend bool operator==(const CorrectionRecord&, const CorrectionRecord&) = default;
};

/// Records that could not be parsed are returned as rejections instead of
/// aborting the whole file.
struct CorrectionFile {
  std::vector<CorrectionRecord> records;
  std::vector<std::string> rejected;  ///< reasons for unparseable records
};

nlohmann::json corrections_to_json(std::vector<CorrectionRecord> records);
CorrectionFile corrections_from_json(const nlohmann::json& j);
/// Writes records sorted by (frame, marker name).
void save_corrections(const std::filesystem::path& path, const std::vector<CorrectionRecord>& records);
CorrectionFile load_corrections(const std::filesystem::path& path);

inline constexpr double kLargeAdjustment = 0.1;  ///< m

struct CorrectionSummary {
  std::size_t applied = 0;
  std::size_t large = 0;        ///< applied records with magnitude > kLargeAdjustment
  double large_fraction = 0;    ///< large / applied
  std::vector<std::string> rejected;  ///< one reason per rejected record
  std::vector<std::string> warnings;
  std::map<std::string, ErrorSummary> per_marker;  ///< adjustment magnitudes, m
};

struct CorrectionResult {
  TrajectoryEstimate ground_truth;
  CorrectionSummary summary;
};

/// Scene markers with the corrections applied (later records win). Records
/// referencing unknown frames or markers are rejected individually.
CorrectionResult apply_corrections(const SceneDocument& scene, const CorrectionFile& corrections);

nlohmann::json correction_summary_to_json(const CorrectionSummary& s);

}  // namespace gallop
