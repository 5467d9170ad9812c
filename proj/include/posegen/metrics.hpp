#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "posegen/coco.hpp"
#include "posegen/raster.hpp"
#include "posegen/transform.hpp"

namespace posegen::metrics {

using Joints = std::vector<Vec3>;  // one pose, millimetres

/// Samples sharing one joint order; `root` indexes the pelvis.
struct PoseSet3D {
  std::vector<Joints> samples;
  std::size_t root = 0;
};

/// Subtracts each set's root joint from all of its joints.
std::pair<Joints, Joints> root_align(const Joints& pred, const Joints& gt, std::size_t root);

/// Mean joint error after root alignment (root taken from `gt`).
double mpjpe(const PoseSet3D& pred, const PoseSet3D& gt);

/// Mean per-joint error after root alignment, one value per joint.
std::vector<double> per_joint_mpjpe(const PoseSet3D& pred, const PoseSet3D& gt);

struct Similarity {
  double scale = 1.0;
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return scale * (rotation * p) + translation; }
};

/// Least-squares similarity mapping `pred` onto `gt` with a proper rotation
/// (det = +1). Throws InvalidArgument if either pose has all joints coincident.
Similarity procrustes(const Joints& pred, const Joints& gt);

/// MPJPE after per-sample similarity (Procrustes) alignment.
double pa_mpjpe(const PoseSet3D& pred, const PoseSet3D& gt);

struct LabeledKeypoint {
  double x = 0, y = 0;
  int flag = 0;
};

/// Object keypoint similarity over labelled (flag > 0) keypoints.
/// Throws InvalidArgument when area <= 0 or no keypoint is labelled.
double oks(const std::array<Vec3, coco::kKeypointCount>& pred_xy, const std::array<LabeledKeypoint, coco::kKeypointCount>& gt,
           double area, const std::array<double, coco::kKeypointCount>& sigmas = coco::kSigmas);

struct KeypointPrediction {
  std::int64_t image_id = 0;
  std::array<Vec3, coco::kKeypointCount> keypoints{};  // x, y, per-keypoint score
  double score = 0.0;
};

struct KeypointGroundTruth {
  std::int64_t image_id = 0;
  std::array<LabeledKeypoint, coco::kKeypointCount> keypoints{};
  double area = 0.0;
  std::array<double, 4> bbox{};  // x, y, w, h; used only when no keypoint is labelled
  /// Excluded from recall; detections matched to it count neither way. Set
  /// automatically when no keypoint is labelled.
  bool ignore = false;
};

struct ApOptions {
  std::vector<double> thresholds;  // empty = 0.50:0.05:0.95
  std::size_t max_detections = 20;
  std::array<double, coco::kKeypointCount> sigmas = coco::kSigmas;
};

struct ApResult {
  bool valid = false;  // false when there is no non-ignored ground truth
  double ap = 0, ap50 = 0, ap75 = 0, ar = 0;
  std::vector<double> thresholds;
  std::vector<double> ap_per_threshold;
  std::vector<double> recall_per_threshold;
};

std::vector<double> default_oks_thresholds();

/// COCO keypoint protocol: greedy score-ordered matching per image, 101-point
/// interpolated precision, AP averaged over thresholds. Inside the matcher OKS
/// uses area + 2^-52, and ground truth without labelled keypoints is scored by
/// distance to a box twice its bbox size, as pycocotools does.
ApResult keypoint_ap(const std::vector<KeypointPrediction>& preds, const std::vector<KeypointGroundTruth>& gts,
                     const ApOptions& options = {});

/// |a and b| / |a or b|; 1 when both are empty.
double mask_iou(const geometry::BinaryMask& a, const geometry::BinaryMask& b);

using JointMap = std::array<std::size_t, 16>;  // output slot -> H36M-17 index

/// H36M-17 (Hip, RHip, RKnee, RFoot, LHip, LKnee, LFoot, Spine, Thorax,
/// Neck/Nose, Head, LShoulder, LElbow, LWrist, RShoulder, RElbow, RWrist)
/// into pelvis, spine, neck, head, l_shoulder, l_elbow, l_wrist, r_shoulder,
/// r_elbow, r_wrist, l_hip, l_knee, l_ankle, r_hip, r_knee, r_ankle.
/// Thorax becomes neck; Neck/Nose is dropped.
JointMap default_h36m_map();

Joints map_h36m17_to_16(const Joints& joints17, const JointMap& map = default_h36m_map());

}  // namespace posegen::metrics
