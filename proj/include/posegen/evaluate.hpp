#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "posegen/json_io.hpp"
#include "posegen/metrics.hpp"

namespace posegen::evaluate {

enum class Task { Keypoints2d, Pose3d, Segmentation };

/// "2d", "3d" or "seg"; throws InvalidArgument otherwise.
Task parse_task(const std::string& name);

struct Options {
  std::optional<std::string> split;  // "train", "val" or "test"; all frames when empty
  metrics::JointMap joint_map = metrics::default_h36m_map();
  metrics::ApOptions ap;
};

/// Prediction formats (JSON arrays):
///   2d:  [{"image_id", "keypoints": [51 numbers, x y score per keypoint], "score"}]
///   3d:  [{"frame": image_id, "person": instance_id, "joints16" | "joints17": [[x,y,z] mm, camera frame]}]
///   seg: [{"image_id", "segmentation": {"size": [h, w], "counts": [...]}, "score"}]
/// Predictions naming an image, frame or person absent from the ground truth
/// raise DataError, as do malformed entries.
Json evaluate_keypoints(const std::filesystem::path& root, const Json& predictions, const Options& options = {});
Json evaluate_pose3d(const std::filesystem::path& root, const Json& predictions, const Options& options = {});
Json evaluate_segmentation(const std::filesystem::path& root, const Json& predictions, const Options& options = {});

Json evaluate(const std::filesystem::path& root, const Json& predictions, Task task, const Options& options = {});

/// Reads a JSON array of 16 H36M-17 indices.
metrics::JointMap load_joint_map(const std::filesystem::path& path);

}  // namespace posegen::evaluate
