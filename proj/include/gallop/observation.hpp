#pragma once

#include "gallop/types.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace gallop {

struct Detection {
  double u = 0;
  double v = 0;
  double likelihood = 0;

  friend bool operator==(const Detection&, const Detection&) = default;
};

/// One row of a keypoint file.
struct Observation {
  int frame = 0;
  int camera = 0;  ///< camera id
  int marker = 0;
  Detection detection;
};

/// Dense frame x camera x marker grid of optional 2D detections. Frames are
/// contiguous starting at first_frame; a channel that was never detected is
/// empty, which is distinct from a low-likelihood detection.
class ObservationSet {
public:
  ObservationSet() = default;
  ObservationSet(int first_frame, int num_frames, std::vector<int> camera_ids);

  int first_frame() const { return first_frame_; }
  int num_frames() const { return num_frames_; }
  int num_cameras() const { return static_cast<int>(camera_ids_.size()); }
  const std::vector<int>& camera_ids() const { return camera_ids_; }

  /// Indices are positions: frame offset from first_frame and camera position.
  std::optional<Detection>& at(int frame, int camera, int marker) {
    return data_[offset(frame, camera, marker)];
  }
  const std::optional<Detection>& at(int frame, int camera, int marker) const {
    return data_[offset(frame, camera, marker)];
  }

  /// Frames [begin, begin + count) as a new set.
  ObservationSet slice(int begin, int count) const;

  /// All present detections as rows, ordered frame, camera, marker.
  std::vector<Observation> rows() const;

  friend bool operator==(const ObservationSet&, const ObservationSet&) = default;

private:
  std::size_t offset(int frame, int camera, int marker) const {
    return (static_cast<std::size_t>(frame) * camera_ids_.size() + camera) * kNumMarkers + marker;
  }

  int first_frame_ = 0;
  int num_frames_ = 0;
  std::vector<int> camera_ids_;
  std::vector<std::optional<Detection>> data_;
};

/// Column names used when ingesting a detector's CSV output.
struct KeypointColumns {
  std::string frame = "frame";
  std::string camera = "camera";
  std::string marker = "marker";
  std::string u = "u";
  std::string v = "v";
  std::string likelihood = "likelihood";
};

struct KeypointHeader {
  std::string rig_id;
  double frame_rate = 0;
  std::vector<std::string> markers;
};

/// Keypoint file:
///
///   # gallop.keypoints/1
///   # rig: <id>
///   # frame_rate: <Hz>
///   # markers: l_eye,r_eye,...
///   frame,camera,marker,u,v,likelihood
///   0,1,l_eye,1203.5,644.25,0.98
///
/// Marker cells are names from the header's marker list.
void write_keypoints(const std::filesystem::path& path, const ObservationSet& obs,
                     const KeypointHeader& header);

struct KeypointFile {
  KeypointHeader header;
  ObservationSet observations;
};

/// Reads a keypoint file. `camera_ids` fixes the camera axis (normally the
/// rig order); rows naming other cameras are rejected. Without a schema line
/// the file is treated as a plain CSV whose columns are located by `columns`.
KeypointFile read_keypoints(const std::filesystem::path& path, const std::vector<int>& camera_ids,
                            const KeypointColumns& columns = {});

}  // namespace gallop
