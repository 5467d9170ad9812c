#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posegen/bvh.hpp"
#include "posegen/camera.hpp"
#include "posegen/coco.hpp"
#include "posegen/raster.hpp"
#include "posegen/rig.hpp"

namespace posegen::annotate {

/// Default sum-of-joint-motion threshold for keeping a frame, millimetres.
inline constexpr double kDefaultRedundancyMm = 100.0;

struct KeypointAttachment {
  std::string coco_name;
  std::size_t joint = 0;
  Vec3 local_offset = Vec3::Zero();  // metres, in the joint's frame
};

/// Where each of the 17 COCO keypoints sits on a rig, in canonical COCO order.
struct KeypointAttachmentTable {
  std::array<KeypointAttachment, coco::kKeypointCount> entries;
};

/// Document: {"keypoints": {"<coco name>": {"joint": "<name>", "offset": [x,y,z]}}}
/// with all 17 names present; omitted offsets are zero.
KeypointAttachmentTable load_attachment_table(std::string_view document, const rig::Skeleton& skeleton,
                                              const std::string& origin = "<keypoints>");
KeypointAttachmentTable load_attachment_table_file(const std::filesystem::path& path, const rig::Skeleton& skeleton);

/// World positions of the 17 keypoints: global(joint) applied to local_offset.
std::vector<Vec3> coco_world_points(const KeypointAttachmentTable& table, const rig::Skeleton& skeleton,
                                    const rig::WorldPose& world);

struct Joint2d {
  double u = 0, v = 0;
  bool in_frame = false;
  bool visible = false;  // unobstructed line of sight from the camera
};

struct Keypoint {
  double u = 0, v = 0;
  int flag = 0;  // 0 out of frame or behind camera, 1 occluded, 2 visible
};

struct PersonAnnotation {
  int instance_id = 0;
  std::vector<std::string> joint_names;
  std::vector<Vec3> joints3d_world_mm;
  std::vector<Vec3> joints3d_camera_mm;
  std::vector<Joint2d> joints2d;
  std::array<Keypoint, coco::kKeypointCount> keypoints{};
  std::optional<geometry::BBox> bbox;
  std::vector<std::uint32_t> mask_rle;
  std::size_t area = 0;

  int num_keypoints() const;
};

struct FrameAnnotation {
  std::size_t frame_index = 0;
  std::string camera_id;
  int width = 0;
  int height = 0;
  std::vector<PersonAnnotation> persons;
};

/// One tracked character at one instant.
struct TrackedPerson {
  int instance_id = 0;
  const rig::Skeleton* skeleton = nullptr;
  const KeypointAttachmentTable* keypoints = nullptr;
  rig::WorldPose world;
};

/// Flag rule: 2 if the point is in frame and unobstructed, 1 if in frame and
/// obstructed, 0 otherwise.
int keypoint_flag(bool in_frame, bool visible);

/// `bvh` and `buffer` must come from the same posed geometry as `persons`.
FrameAnnotation annotate_frame(std::size_t frame_index, const std::vector<TrackedPerson>& persons,
                               const camera::CameraModel& cam, const geometry::Bvh& bvh,
                               const geometry::InstanceBuffer& buffer,
                               double skin_tolerance = geometry::kDefaultSkinTolerance);

/// Keep only if every person's 17 keypoints and projected joints are in frame.
bool boundary_filter(const FrameAnnotation& frame);

/// Sum over joints of Euclidean displacement, millimetres. Throws on joint-count mismatch.
double person_motion_mm(const std::vector<Vec3>& last, const std::vector<Vec3>& current);

using PersonJoints = std::map<int, std::vector<Vec3>>;  // instance id -> camera-space joints, mm

PersonJoints camera_joints(const FrameAnnotation& frame);

/// Keep if any person moved at least `threshold_mm`. A change in the set of
/// persons always keeps the frame.
bool redundancy_filter(const PersonJoints& last_kept, const PersonJoints& current,
                       double threshold_mm = kDefaultRedundancyMm);

/// Stateful redundancy filter for one camera stream; a kept frame becomes the
/// new reference.
class RedundancyFilter {
 public:
  explicit RedundancyFilter(double threshold_mm = kDefaultRedundancyMm) : threshold_mm_(threshold_mm) {}
  bool offer(const FrameAnnotation& frame);

 private:
  double threshold_mm_;
  std::optional<PersonJoints> reference_;
};

}  // namespace posegen::annotate
