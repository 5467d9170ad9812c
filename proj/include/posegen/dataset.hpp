#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "posegen/annotate.hpp"
#include "posegen/image_io.hpp"
#include "posegen/json_io.hpp"
#include "posegen/raster.hpp"

namespace posegen::dataset {

namespace fs = std::filesystem;

inline constexpr const char* kFormatVersion = "1.0";
/// Significant digits for 2D pixel coordinates in annotation files.
inline constexpr int kPixelDigits = 9;
/// Significant digits for millimetre joint coordinates in sidecars.
inline constexpr int kJointDigits = 12;

/// Paths of every file in a dataset rooted at `root`:
///   <root>/manifest.json, <root>/splits.json
///   <root>/<seq>/calib/<cam>.json
///   <root>/<seq>/<cam>/anno_coco.json
///   <root>/<seq>/<cam>/{frames,masks}/<frame:06>.png
///   <root>/<seq>/<cam>/joints3d/<frame:06>.json
struct Layout {
  fs::path root;

  fs::path manifest() const { return root / "manifest.json"; }
  fs::path splits() const { return root / "splits.json"; }
  fs::path calibration(const std::string& seq, const std::string& cam) const {
    return root / seq / "calib" / (cam + ".json");
  }
  fs::path camera_dir(const std::string& seq, const std::string& cam) const { return root / seq / cam; }
  fs::path coco(const std::string& seq, const std::string& cam) const { return camera_dir(seq, cam) / "anno_coco.json"; }
  fs::path frame_image(const std::string& seq, const std::string& cam, std::size_t frame) const;
  fs::path mask(const std::string& seq, const std::string& cam, std::size_t frame) const;
  fs::path sidecar(const std::string& seq, const std::string& cam, std::size_t frame) const;
};

std::string frame_stem(std::size_t frame_index);

/// Globally unique COCO image id: sequence number, 1-based camera ordinal and frame index.
std::int64_t image_id(int sequence_number, int camera_ordinal, std::size_t frame_index);
/// Annotation id for a person in an image.
std::int64_t annotation_id(std::int64_t image_id, int instance_id);

/// COCO keypoint document for one camera stream. Image ids are
/// `image_id_base + frame_index`; file names point at frames/<frame>.png.
Json coco_document(const std::vector<annotate::FrameAnnotation>& frames, std::int64_t image_id_base);
void write_coco(const std::vector<annotate::FrameAnnotation>& frames, std::int64_t image_id_base, const fs::path& path);

Json sidecar_document(const annotate::FrameAnnotation& frame);
void write_3d_sidecar(const annotate::FrameAnnotation& frame, const fs::path& path);
/// Restores frame index, camera id and per-person 3D/2D joints (no masks or keypoints).
annotate::FrameAnnotation read_3d_sidecar(const fs::path& path);

/// Single-channel image whose pixel values are instance ids (0 = background).
Image mask_image(const geometry::InstanceBuffer& buffer);
void write_masks(const annotate::FrameAnnotation& frame, const geometry::InstanceBuffer& buffer, const fs::path& path);

enum class Split { Train, Val, Test };
const char* split_name(Split s);

struct FrameKey {
  std::string sequence;
  std::int64_t image_id = 0;
};

using SplitAssignment = std::map<std::int64_t, Split>;

/// Per-sequence seeded shuffle, then partition by largest-remainder rounding
/// of the fractions (ties favour train, then val).
SplitAssignment split(const std::vector<FrameKey>& frames, std::uint64_t seed,
                      std::array<double, 3> fractions = {0.75, 0.20, 0.05});

/// Largest-remainder counts for n items.
std::array<std::size_t, 3> split_counts(std::size_t n, const std::array<double, 3>& fractions);

struct SequenceEntry {
  std::string sequence_id;
  int sequence_number = 1;
  std::string mode;  // "coherent" or "randomized"
  std::vector<std::string> camera_ids;
  std::map<std::string, std::size_t> frame_counts;  // kept frames per camera
};

struct Manifest {
  std::string name;
  std::string version = kFormatVersion;
  std::uint64_t split_seed = 0;
  std::vector<SequenceEntry> sequences;

  Json to_json() const;
  static Manifest from_json(const Json& doc, const std::string& origin);
  /// Inserts or replaces by sequence id; keeps sequences sorted by id.
  void upsert(SequenceEntry entry);
};

Manifest read_manifest(const fs::path& root);

/// Every image in the dataset, grouped by sequence, read from the COCO documents.
std::vector<FrameKey> dataset_frames(const fs::path& root, const Manifest& manifest);

Json splits_document(const std::vector<FrameKey>& frames, const SplitAssignment& assignment, std::uint64_t seed,
                     const std::array<double, 3>& fractions);

/// Computes and writes <root>/splits.json; returns the assignment.
SplitAssignment write_splits(const fs::path& root, std::uint64_t seed);

}  // namespace posegen::dataset
