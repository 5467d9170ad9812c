#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posegen/rig.hpp"
#include "posegen/rng.hpp"

namespace posegen::simulate {

/// A character within this distance of its target counts as arrived.
inline constexpr double kArrivalRadius = 0.1;

/// Name-indexed clip set.
class ClipLibrary {
 public:
  ClipLibrary() = default;
  explicit ClipLibrary(std::vector<rig::AnimationClip> clips);

  const rig::AnimationClip& at(const std::string& name) const;
  bool contains(const std::string& name) const { return clips_.count(name) != 0; }
  std::vector<std::string> names() const;

 private:
  std::map<std::string, rig::AnimationClip> clips_;
};

struct Marker {
  Vec3 position = Vec3::Zero();
  std::string idle_clip;
  double dwell = 0.0;
};

struct ScriptedPlan {
  std::vector<Marker> markers;
  std::string locomotion_clip;
  bool repeat = true;
};

struct RandomPlan {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  double ground_z = 0;
  std::vector<std::string> clip_library;
  std::uint64_t seed = 0;
  double idle_min = 1.0;  // seconds
  double idle_max = 3.0;
};

using Plan = std::variant<ScriptedPlan, RandomPlan>;

enum class Phase { Moving, Idle };

struct CharacterState {
  int instance_id = 1;
  Vec3 position = Vec3::Zero();
  double heading = 0.0;  // radians about world +z; 0 faces +x
  std::string active_clip;
  double clip_time = 0.0;
  Phase phase = Phase::Moving;
  std::optional<Vec3> target;
  std::size_t marker_index = 0;  // scripted mode: marker being approached or dwelt at
  double idle_remaining = 0.0;

  bool operator==(const CharacterState&) const = default;
};

/// Throws ConfigError when the plan breaks its invariants against `library`.
void validate_plan(const Plan& plan, const ClipLibrary& library);

/// Starting state: scripted plans head for the first marker; random plans draw
/// a target and a locomotion clip from `rng`.
CharacterState initial_state(const Plan& plan, const ClipLibrary& library, int instance_id, const Vec3& position,
                             double heading, Rng& rng);

CharacterState step_scripted(const ScriptedPlan& plan, const ClipLibrary& library, const CharacterState& state,
                             double dt);

CharacterState step_random(const RandomPlan& plan, const ClipLibrary& library, const CharacterState& state, double dt,
                           Rng& rng);

/// Root placement for a state: yaw by heading, then translate to position.
RigidTransform placement(const CharacterState& state);

/// Clip pose at the state's clip time with the root placed in the world.
rig::Pose pose_for(const CharacterState& state, const ClipLibrary& library);

struct Character {
  CharacterState state;
  Plan plan;
  const rig::Skeleton* skeleton = nullptr;
  const ClipLibrary* library = nullptr;
  Rng rng{0};
};

struct CharacterFrame {
  CharacterState state;
  rig::Pose pose;
};

/// Steps every character by 1/frame_rate per frame. Entry [f][c] holds
/// character c after f + 1 steps.
std::vector<std::vector<CharacterFrame>> simulate_sequence(std::vector<Character> characters, double frame_rate,
                                                           std::size_t n_frames);

}  // namespace posegen::simulate
