#pragma once

#include "gallop/types.hpp"

#include <json.hpp>

#include <array>
#include <filesystem>
#include <optional>
#include <vector>

namespace gallop {

/// Equidistant fisheye camera. Extrinsics map inertial points into the camera
/// frame: X_cam = rotation * X + translation.
struct CameraModel {
  int id = 0;
  int width = 0;
  int height = 0;
  double fx = 0, fy = 0, cx = 0, cy = 0;
  std::array<double, 4> k{0, 0, 0, 0};
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 center() const { return -rotation.transpose() * translation; }
  bool in_image(const Vec2& px) const {
    return px.x() >= 0 && px.y() >= 0 && px.x() < width && px.y() < height;
  }
  friend bool operator==(const CameraModel&, const CameraModel&) = default;
};

struct CameraRig {
  std::vector<CameraModel> cameras;
  double frame_rate = 0;

  double dt() const { return 1.0 / frame_rate; }
  int index_of(int camera_id) const;  ///< -1 when unknown
  friend bool operator==(const CameraRig&, const CameraRig&) = default;
};

/// Pixel coordinates, or nullopt when the point is at or behind the image
/// plane (Z <= 0). Callers must not treat nullopt as a measurement.
std::optional<Vec2> project(const CameraModel& cam, const Vec3& point);

/// d(u, v)/d(point); nullopt when the point is behind the camera.
std::optional<Eigen::Matrix<double, 2, 3>> project_jacobian(const CameraModel& cam,
                                                            const Vec3& point);

/// Unit viewing ray (inertial frame) through a pixel.
Vec3 back_project(const CameraModel& cam, const Vec2& px);

/// Throws ValidationError naming the camera and field.
void validate(const CameraModel& cam);
void validate(const CameraRig& rig);

CameraRig rig_from_json(const nlohmann::json& doc);
nlohmann::json rig_to_json(const CameraRig& rig);
CameraRig load_rig(const std::filesystem::path& path);

}  // namespace gallop
