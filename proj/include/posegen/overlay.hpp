#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "posegen/image_io.hpp"
#include "posegen/json_io.hpp"

namespace posegen::overlay {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kVisibleKeypoint = {255, 210, 0};
inline constexpr Rgb kOccludedKeypoint = {0, 220, 60};
inline constexpr Rgb kSkeletonEdge = {250, 250, 250};

/// Empty fields match everything.
struct FrameSelector {
  std::optional<std::string> sequence;
  std::optional<std::string> camera;
  std::optional<std::size_t> frame;
};

/// Draws onto `base` (RGB): mask tint, bbox outlines in the instance colour,
/// skeleton edges between labelled keypoints and a 3x3 marker per labelled
/// keypoint centred on the pixel containing it. `annotations` are COCO
/// annotation objects of one image.
Image draw_overlay(const Image& base, const Image& mask, const std::vector<Json>& annotations);

/// Renders every selected frame of a dataset into
/// <out_dir>/<sequence>/<camera>/<frame>.png and returns the written paths.
/// Frames without an RGB render are drawn on a grey background. Throws
/// DataError when nothing matches or a selected frame's files are missing.
std::vector<std::filesystem::path> render_overlays(const std::filesystem::path& root, const FrameSelector& selector,
                                                   const std::filesystem::path& out_dir);

}  // namespace posegen::overlay
