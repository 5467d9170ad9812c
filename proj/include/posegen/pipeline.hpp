#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "posegen/annotate.hpp"
#include "posegen/camera.hpp"
#include "posegen/config.hpp"
#include "posegen/image_io.hpp"
#include "posegen/mesh.hpp"
#include "posegen/simulate.hpp"

namespace posegen::pipeline {

struct CharacterAssets {
  std::shared_ptr<const rig::Skeleton> skeleton;
  std::shared_ptr<const geometry::SkinnedMesh> mesh;
  std::shared_ptr<const annotate::KeypointAttachmentTable> keypoints;
  std::shared_ptr<const simulate::ClipLibrary> clips;
};

/// Loaded assets for one config. Files shared between characters load once.
struct SceneAssets {
  std::optional<geometry::StaticMesh> environment;
  std::vector<CharacterAssets> characters;  // parallel to config.characters
};

/// Throws ConfigError for missing or malformed assets, or rigs without exactly
/// 16 annotated joints.
SceneAssets load_assets(const config::GenerationConfig& cfg);

std::vector<simulate::Character> make_characters(const config::GenerationConfig& cfg, const SceneAssets& assets);

std::vector<camera::CameraModel> make_cameras(const config::GenerationConfig& cfg);

/// World geometry and tracked persons for one simulated instant.
struct PosedScene {
  geometry::TaggedTriangleSet triangles;
  std::vector<annotate::TrackedPerson> persons;
};

PosedScene pose_scene(const config::GenerationConfig& cfg, const SceneAssets& assets,
                      const std::vector<simulate::CharacterFrame>& frame);

/// RGB colour for an instance id; environment and empty pixels get fixed greys/sky.
std::array<std::uint8_t, 3> instance_colour(int instance_id);

/// Flat Lambert shading with a light at the camera centre.
Image shade_frame(const geometry::InstanceBuffer& buffer, const geometry::TaggedTriangleSet& triangles,
                  const camera::CameraModel& cam);

struct CameraSummary {
  std::string camera_id;
  std::size_t simulated = 0;
  std::size_t dropped_boundary = 0;
  std::size_t dropped_redundancy = 0;
  std::size_t kept = 0;
};

struct GenerateSummary {
  std::string sequence_id;
  std::string mode;
  std::string output;
  std::size_t frames = 0;
  std::vector<CameraSummary> cameras;

  Json to_json() const;
};

struct GenerateOptions {
  std::size_t jobs = 1;
  std::function<void(const std::string&)> log;  // progress lines; may be empty
};

/// Simulates, renders, annotates, filters and writes one sequence into
/// cfg.output, replacing any previous output of the same sequence id. The
/// manifest and splits are updated to cover every sequence in the dataset.
GenerateSummary generate(const config::GenerationConfig& cfg, const GenerateOptions& options = {});

}  // namespace posegen::pipeline
