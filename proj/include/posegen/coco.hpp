#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "posegen/raster.hpp"

namespace posegen::coco {

inline constexpr std::size_t kKeypointCount = 17;

inline constexpr std::array<std::string_view, kKeypointCount> kKeypointNames = {
    "nose",          "left_eye",       "right_eye",  "left_ear",    "right_ear",   "left_shoulder",
    "right_shoulder", "left_elbow",    "right_elbow", "left_wrist", "right_wrist", "left_hip",
    "right_hip",     "left_knee",      "right_knee", "left_ankle",  "right_ankle"};

// Published per-keypoint OKS constants, same order as kKeypointNames.
inline constexpr std::array<double, kKeypointCount> kSigmas = {
    0.026, 0.025, 0.025, 0.035, 0.035, 0.079, 0.079, 0.072, 0.072,
    0.062, 0.062, 0.107, 0.107, 0.087, 0.087, 0.089, 0.089};

// Skeleton edges as published in the COCO person category (1-based).
inline constexpr std::array<std::array<int, 2>, 19> kSkeletonEdges = {{{16, 14}, {14, 12}, {17, 15}, {15, 13},
                                                                        {12, 13}, {6, 12},  {7, 13},  {6, 7},
                                                                        {6, 8},   {7, 9},   {8, 10},  {9, 11},
                                                                        {2, 3},   {1, 2},   {1, 3},   {2, 4},
                                                                        {3, 5},   {4, 6},   {5, 7}}};

/// Uncompressed COCO RLE: column-major run lengths starting with a run of
/// zeros (possibly empty), alternating thereafter.
std::vector<std::uint32_t> rle_encode(const geometry::BinaryMask& mask);
geometry::BinaryMask rle_decode(const std::vector<std::uint32_t>& counts, int width, int height);
std::size_t rle_area(const std::vector<std::uint32_t>& counts);

}  // namespace posegen::coco
