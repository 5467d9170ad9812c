#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "posegen/mesh.hpp"

namespace posegen::geometry {

/// Hits closer than this along a ray are ignored (self-intersection guard).
inline constexpr double kRayEpsilon = 1e-6;

/// Default slack for point visibility: surface hits within this distance of
/// the target point belong to the skin covering it.
inline constexpr double kDefaultSkinTolerance = 0.05;

struct Hit {
  double t = 0.0;
  int instance_id = 0;
  std::uint32_t triangle = 0;
};

/// Strict ordering used by every nearest-hit query: distance, then instance
/// id, then triangle index.
bool hit_precedes(const Hit& a, const Hit& b);

/// Möller-Trumbore with inclusive edges. Returns the ray parameter of the
/// plane crossing when the ray passes through the closed triangle.
std::optional<double> intersect_triangle(const Vec3& origin, const Vec3& dir, const std::array<Vec3, 3>& tri);

/// Reference query: tests every triangle. Nearest hit with t in (kRayEpsilon, t_max).
std::optional<Hit> brute_force_nearest_hit(const TaggedTriangleSet& set, const Vec3& origin, const Vec3& dir,
                                           double t_max);

/// Binned-SAH bounding volume hierarchy over a TaggedTriangleSet. Immutable
/// after construction; queries may run concurrently.
class Bvh {
 public:
  /// Throws InvalidArgument on an empty set.
  explicit Bvh(TaggedTriangleSet set);

  /// Same contract and tie-breaking as brute_force_nearest_hit.
  std::optional<Hit> nearest_hit(const Vec3& origin, const Vec3& dir, double t_max) const;

  const TaggedTriangleSet& triangles() const { return set_; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    Eigen::AlignedBox3d box;
    std::uint32_t first = 0;  // first primitive (leaf) or right child (interior)
    std::uint32_t count = 0;  // 0 for interior nodes; left child is this + 1
  };

  std::uint32_t build(std::uint32_t begin, std::uint32_t end, int depth, std::vector<Vec3>& centroids,
                      std::vector<Eigen::AlignedBox3d>& boxes);

  TaggedTriangleSet set_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
};

std::optional<Hit> ray_nearest_hit(const Bvh& bvh, const Vec3& origin, const Vec3& dir, double t_max);

/// True when nothing blocks the segment from `camera_origin` to `point`,
/// ignoring hits within `skin_tolerance` of the point.
bool point_visibility(const Bvh& bvh, const Vec3& camera_origin, const Vec3& point,
                      double skin_tolerance = kDefaultSkinTolerance);

}  // namespace posegen::geometry
