#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posegen/camera.hpp"
#include "posegen/mesh.hpp"

namespace posegen::geometry {

inline constexpr std::int16_t kEmptyPixel = -1;

/// Per-pixel nearest surface: instance id (0 = environment, -1 = empty),
/// camera-space depth in metres and the index of the winning triangle.
struct InstanceBuffer {
  int width = 0;
  int height = 0;
  std::vector<std::int16_t> ids;
  std::vector<double> depth;
  std::vector<std::int32_t> triangle;

  InstanceBuffer() = default;
  InstanceBuffer(int w, int h);

  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  std::int16_t id_at(int x, int y) const { return ids[index(x, y)]; }
};

/// Row-major boolean grid.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  BinaryMask() = default;
  BinaryMask(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

  bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v = true) { bits[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool operator==(const BinaryMask&) const = default;
};

struct BBox {
  int x = 0, y = 0, w = 0, h = 0;
  bool operator==(const BBox&) const = default;
};

/// Z-buffered rasterization sampled at pixel centres with the top-left fill
/// rule. Geometry in front of the near plane only. Equal depths resolve to the
/// lower instance id, then the lower triangle index.
InstanceBuffer rasterize_instances(const TaggedTriangleSet& set, const camera::CameraModel& cam);

/// Pixels owned by `instance_id` (1..255).
BinaryMask mask_of(const InstanceBuffer& buffer, int instance_id);

/// Tight box around the true pixels; nullopt for an empty mask.
std::optional<BBox> visible_bbox(const BinaryMask& mask);

}  // namespace posegen::geometry
