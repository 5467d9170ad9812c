#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "posegen/json_io.hpp"

namespace posegen::validate {

/// Tolerance for camera-space joints recomputed from world joints and the
/// stored calibration, millimetres.
inline constexpr double kCameraRecomputeToleranceMm = 1e-3;
/// Tolerance for stored 2D joint positions against reprojection, pixels.
inline constexpr double kReprojectionTolerancePx = 1e-3;

struct Report {
  std::size_t sequences = 0;
  std::size_t images = 0;
  std::size_t annotations = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  Json to_json() const;
};

/// Runs every cross-file check on a dataset: COCO schema, bbox against mask,
/// RLE against mask image, areas, num_keypoints, mask ids against
/// annotations, sidecar camera coordinates against calibration, manifest
/// counts and the split partition. Throws DataError only when the dataset
/// root itself is unusable (no manifest); everything else is reported.
Report validate_dataset(const std::filesystem::path& root);

}  // namespace posegen::validate
