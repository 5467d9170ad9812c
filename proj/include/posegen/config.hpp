#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "posegen/simulate.hpp"

namespace posegen::config {

namespace fs = std::filesystem;

struct CameraConfig {
  std::string id;
  Vec3 position = Vec3::Zero();
  Vec3 look_at = Vec3::Zero();
  double fov_deg = 60.0;
  int width = 640;
  int height = 480;
};

struct CharacterConfig {
  int instance_id = 1;
  fs::path rig;
  fs::path mesh;
  fs::path keypoints;
  fs::path clips_dir;
  Vec3 start = Vec3::Zero();
  double heading_deg = 0.0;
  simulate::Plan plan;
  bool plan_seed_explicit = false;  // random plans: seed given in the document
};

/// Everything `generate` needs. Relative asset paths in the document are
/// resolved against the directory containing it.
struct GenerationConfig {
  std::string name = "dataset";
  std::string sequence_id = "seq";
  int sequence_number = 1;
  std::optional<fs::path> scene;
  std::vector<CharacterConfig> characters;
  std::vector<CameraConfig> cameras;
  double frame_rate = 30.0;
  std::size_t n_frames = 1;
  bool boundary_filter = true;
  double redundancy_mm = 100.0;
  std::uint64_t seed = 0;
  std::uint64_t split_seed = 0;
  bool split_seed_explicit = false;
  double skin_tolerance = 0.05;
  bool render_rgb = true;
  fs::path output = "out";

  /// "coherent" when every character follows a scripted plan, else "randomized".
  std::string mode() const;
};

/// Throws ConfigError naming the document and the offending field.
GenerationConfig parse_config(const Json& doc, const fs::path& base_dir, const std::string& origin);
GenerationConfig load_config(const fs::path& path);

/// Replaces the master seed and every random plan seed that was derived from it.
void override_seed(GenerationConfig& config, std::uint64_t seed);

}  // namespace posegen::config
