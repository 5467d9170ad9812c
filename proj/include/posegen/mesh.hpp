#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "posegen/rig.hpp"
#include "posegen/transform.hpp"

namespace posegen::geometry {

using TriangleIndices = std::array<std::uint32_t, 3>;

struct StaticMesh {
  std::vector<Vec3> vertices;
  std::vector<TriangleIndices> triangles;
};

struct Influence {
  std::uint32_t joint = 0;
  double weight = 0.0;
};

/// Bind-space mesh with up to four joint influences per vertex.
struct SkinnedMesh {
  std::vector<Vec3> vertices;
  std::vector<TriangleIndices> triangles;
  std::vector<std::vector<Influence>> skin;  // one entry per vertex

  /// Checks weight sums, index ranges and bind-pose triangle areas.
  void validate(std::size_t joint_count) const;
};

inline constexpr int kEnvironmentId = 0;
inline constexpr int kMaxInstanceId = 255;

struct TaggedTriangle {
  std::array<Vec3, 3> v;
  int instance_id = kEnvironmentId;
};

/// World-space triangles tagged with the owning instance (0 = environment).
class TaggedTriangleSet {
 public:
  void add(const TaggedTriangle& tri);
  void add(const StaticMesh& mesh, int instance_id);

  std::size_t size() const { return triangles_.size(); }
  bool empty() const { return triangles_.empty(); }
  const TaggedTriangle& operator[](std::size_t i) const { return triangles_[i]; }
  const std::vector<TaggedTriangle>& triangles() const { return triangles_; }

 private:
  std::vector<TaggedTriangle> triangles_;
};

/// Linear blend skinning: v' = sum_i w_i * M_i * inverse(B_i) * v, where M_i is
/// the posed global and B_i the bind global of joint i. Output keeps the
/// mesh's triangle indices.
StaticMesh skin_mesh(const SkinnedMesh& mesh, const rig::Skeleton& skeleton, const rig::WorldPose& world);

/// Mesh document: {"vertices": [[x,y,z]...], "triangles": [[a,b,c]...],
/// "skin": [[[joint, weight], ...] per vertex]}; joints by name or index.
SkinnedMesh load_skinned_mesh(std::string_view document, const rig::Skeleton& skeleton,
                              const std::string& origin = "<mesh>");
SkinnedMesh load_skinned_mesh_file(const std::filesystem::path& path, const rig::Skeleton& skeleton);

/// Scene document: {"meshes": [{"name", "vertices", "triangles"}...]}; all
/// meshes merged into one world-space environment mesh.
StaticMesh load_scene(std::string_view document, const std::string& origin = "<scene>");
StaticMesh load_scene_file(const std::filesystem::path& path);

}  // namespace posegen::geometry
