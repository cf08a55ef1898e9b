#pragma once

#include "gallop/ekf.hpp"
#include "gallop/fte.hpp"
#include "gallop/observation.hpp"
#include "gallop/synth.hpp"
#include "gallop/triangulate.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gallop {

/// Exit codes of the pipeline and CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitStageFailure = 3;

/// Stage names in dependency order.
inline constexpr std::array<const char*, 6> kStageOrder = {"synth", "triangulate", "ekf",
                                                           "fte",   "score",       "export-scene"};

struct SynthSettings {
  int frames = 100;
  GaitProfile gait;
  /// sigma_n, p_o, sigma_o per dataset; seeds are assigned from the run seed.
  std::vector<CorruptionParams> grid;
  double outlier_likelihood = 1.0;
};

struct SceneSettings {
  std::vector<std::string> datasets;  ///< empty: the first dataset
  std::vector<Method> methods;        ///< empty: every estimator that ran
};

struct PipelineConfig {
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 0;
  std::vector<std::string> stages;

  std::optional<std::filesystem::path> skeleton;  ///< default: built-in cheetah
  std::optional<std::filesystem::path> rig;       ///< default with synth: built-in synthetic rig
  std::optional<std::filesystem::path> keypoints;  ///< external detections (no synth)
  std::optional<std::filesystem::path> ground_truth;     ///< 3D trajectory file for scoring
  std::optional<std::filesystem::path> ground_truth_2d;  ///< keypoint file for scoring
  std::string dataset = "input";                 ///< name of the external dataset
  KeypointColumns keypoint_columns;

  SynthSettings synth;
  TriangulationOptions triangulate;
  EkfConfig ekf;
  FteConfig fte;
  SceneSettings scene;
};

/// Parses a configuration document. Relative paths resolve against
/// `base_dir`. Unknown keys are rejected so typos do not silently fall back
/// to defaults. Throws ParseError / ValidationError.
PipelineConfig config_from_json(const nlohmann::json& doc, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

TriangulationOptions triangulation_options_from_json(const nlohmann::json& j);
EkfConfig ekf_config_from_json(const nlohmann::json& j);
FteConfig fte_config_from_json(const nlohmann::json& j);

/// Output layout below out_dir.
struct OutputLayout {
  std::filesystem::path root;

  std::filesystem::path rig() const { return root / "rig.json"; }
  std::filesystem::path manifest() const { return root / "manifest.json"; }
  std::filesystem::path score_json() const { return root / "score_report.json"; }
  std::filesystem::path score_csv() const { return root / "score_report.csv"; }
  std::filesystem::path dataset_dir(const std::string& d) const { return root / "datasets" / d; }
  std::filesystem::path keypoints(const std::string& d) const { return dataset_dir(d) / "keypoints.csv"; }
  std::filesystem::path ground_truth(const std::string& d) const { return dataset_dir(d) / "ground_truth.json"; }
  std::filesystem::path ground_truth_2d(const std::string& d) const {
    return dataset_dir(d) / "ground_truth_2d.csv";
  }
  std::filesystem::path result(const std::string& d, Method m) const {
    return root / "results" / d / (method_tag(m) + ".json");
  }
  std::filesystem::path scene(const std::string& d, Method m) const {
    return root / "scenes" / d / (method_tag(m) + ".json");
  }
};

/// Runs the configured stages in dependency order. Inputs are checked before
/// any stage runs (exit 2, nothing written); a failing stage stops the run
/// and leaves a manifest marking it incomplete (exit 3). Progress goes to
/// `log`; artifacts only to files.
int run_pipeline(const PipelineConfig& cfg, std::ostream& log);

}  // namespace gallop
