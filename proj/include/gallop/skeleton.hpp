#pragma once

#include "gallop/types.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace gallop {

inline constexpr std::array<const char*, kNumMarkers> kCanonicalMarkers = {
    "l_eye",         "r_eye",       "nose",         "neck_base",     "spine",
    "tail_base",     "tail_mid",    "tail_tip",     "l_shoulder",    "l_front_knee",
    "l_front_ankle", "r_shoulder",  "r_front_knee", "r_front_ankle", "l_hip",
    "l_back_knee",   "l_back_ankle", "r_hip",       "r_back_knee",   "r_back_ankle"};

enum class Axis { kX, kY, kZ };

/// Elementary (active) rotation about a principal axis.
Mat3 axis_rotation(Axis axis, double angle);

struct Rotation {
  Axis axis;
  int param;  ///< index into the pose vector
};

/// A rigid body in the joint tree. Its orientation relative to the inertial
/// frame is R_parent * R(rotations[0]) * R(rotations[1]) * ...
struct RotationNode {
  std::string name;
  int parent = -1;  ///< -1: child of the inertial frame
  std::vector<Rotation> rotations;
};

/// p_marker = p_anchor + R_node * offset. An anchor of -1 is the root
/// position (x, y, z), which is not itself a marker.
struct MarkerLink {
  std::string name;
  int anchor = -1;
  int node = 0;
  Vec3 offset = Vec3::Zero();
};

struct ParamBound {
  double min;
  double max;
};

class SkeletonModel {
public:
  SkeletonModel(std::vector<std::string> param_names,
                std::array<int, 3> root_translation,
                std::vector<RotationNode> nodes,
                std::vector<MarkerLink> markers,
                std::vector<ParamBound> bounds);

  /// The default cheetah model: 14 rigid bodies, 24 pose parameters, 20 markers.
  static SkeletonModel cheetah();

  static SkeletonModel from_json(const nlohmann::json& doc);
  static SkeletonModel load(const std::filesystem::path& path);
  nlohmann::json to_json() const;

  const std::vector<std::string>& param_names() const { return param_names_; }
  const std::array<int, 3>& root_translation() const { return root_translation_; }
  const std::vector<RotationNode>& nodes() const { return nodes_; }
  const std::vector<MarkerLink>& markers() const { return markers_; }
  const std::vector<ParamBound>& bounds() const { return bounds_; }

  int marker_index(const std::string& name) const;  ///< -1 when unknown
  int param_index(const std::string& name) const;   ///< -1 when unknown
  std::vector<std::string> marker_names() const;

  /// Marker indices ordered so every anchor precedes its dependents.
  const std::vector<int>& evaluation_order() const { return marker_order_; }

  /// Nodes whose orientation depends on `node` (including itself).
  const std::vector<bool>& subtree(int node) const { return subtrees_[node]; }

  /// Marker pairs connected by a rigid link (anchor, marker); root-anchored
  /// markers are omitted.
  std::vector<std::pair<int, int>> segments() const;

  bool feasible(const Pose& q) const;
  Pose clamp(const Pose& q) const;

private:
  void validate() const;

  std::vector<std::string> param_names_;
  std::array<int, 3> root_translation_;
  std::vector<RotationNode> nodes_;
  std::vector<MarkerLink> markers_;
  std::vector<ParamBound> bounds_;
  std::vector<int> marker_order_;  // topological evaluation order
  std::vector<std::vector<bool>> subtrees_;
};

/// Local rotation of `node` for the given per-rotation angles (same order as
/// node.rotations).
Mat3 rotation_from_angles(const RotationNode& node, std::span<const double> angles);

/// World orientation of every node for pose q.
std::vector<Mat3> node_orientations(const SkeletonModel& model, const Pose& q);

MarkerCloud forward_kinematics(const SkeletonModel& model, const Pose& q);

/// Analytic d(flattened MarkerCloud)/dq.
MarkerJacobian fk_jacobian(const SkeletonModel& model, const Pose& q);

}  // namespace gallop
