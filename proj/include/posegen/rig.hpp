#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posegen/json_io.hpp"
#include "posegen/transform.hpp"

namespace posegen::rig {

/// Number of joints every tracked character exports in 3D.
inline constexpr std::size_t kAnnotatedJointCount = 16;

struct Joint {
  std::string name;
  std::optional<std::size_t> parent;
  RigidTransform bind_local;
};

/// Joint hierarchy in topological order (parents precede children), with a
/// single root and an ordered list of annotated joints.
class Skeleton {
 public:
  Skeleton() = default;

  /// Validates and builds. Throws ConfigError on duplicate names, multiple
  /// roots, out-of-order parents, cycles, or unknown annotated joints.
  static Skeleton create(std::vector<Joint> joints, const std::vector<std::string>& annotated_names);

  std::size_t size() const { return joints_.size(); }
  const std::vector<Joint>& joints() const { return joints_; }
  const Joint& joint(std::size_t i) const { return joints_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Skeleton indices of the annotated joints, in declared order.
  const std::vector<std::size_t>& annotated() const { return annotated_; }
  std::vector<std::string> annotated_names() const;

  bool operator==(const Skeleton& other) const;

 private:
  std::vector<Joint> joints_;
  std::vector<std::size_t> annotated_;
};

struct Keyframe {
  double time = 0.0;
  RigidTransform local;
};

/// Keyframed local transforms per skeleton joint. Joints without an authored
/// track hold their bind transform.
struct AnimationClip {
  std::string name;
  double duration = 1.0;
  bool loopable = true;
  double locomotion_speed = 0.0;  // m/s, 0 for idle clips
  std::vector<std::vector<Keyframe>> tracks;  // indexed by skeleton joint

  bool is_locomotion() const { return locomotion_speed > 0.0; }
};

struct Pose {
  std::vector<RigidTransform> locals;
};

struct WorldPose {
  std::vector<RigidTransform> globals;
};

Skeleton load_skeleton(std::string_view document, const std::string& origin = "<rig>");
Skeleton load_skeleton_file(const std::filesystem::path& path);
Json skeleton_to_json(const Skeleton& skeleton);

/// Tracks are matched to joints by name; unknown track names are an error.
AnimationClip load_clip(std::string_view document, const Skeleton& skeleton,
                        const std::string& origin = "<clip>");
AnimationClip load_clip_file(const std::filesystem::path& path, const Skeleton& skeleton);
/// Every `*.json` in `dir`, sorted by clip name.
std::vector<AnimationClip> load_clip_library(const std::filesystem::path& dir, const Skeleton& skeleton);

Pose bind_pose(const Skeleton& skeleton);

/// Interpolated local pose at time t. Translation lerps, rotation slerps along
/// the shortest arc; a time equal to a keyframe returns that keyframe exactly.
Pose sample_clip(const AnimationClip& clip, double t, bool looped);

WorldPose forward_kinematics(const Skeleton& skeleton, const Pose& pose);

std::vector<Vec3> annotated_joint_positions(const Skeleton& skeleton, const WorldPose& world);

}  // namespace posegen::rig
