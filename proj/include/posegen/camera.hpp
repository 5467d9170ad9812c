#pragma once

#include <optional>
#include <string>

#include "posegen/json_io.hpp"
#include "posegen/transform.hpp"

namespace posegen::camera {

/// Points with camera-space depth at or below this are treated as behind the camera.
inline constexpr double kNearPlane = 1e-4;

struct Intrinsics {
  double fx = 0, fy = 0, cx = 0, cy = 0;
};

/// Static pinhole camera. Camera frame: +x right, +y down, +z along the optical axis.
/// Pixel (0,0) covers [0,1)x[0,1); pixel centres sit at half-integers.
struct CameraModel {
  std::string id;
  int width = 0;
  int height = 0;
  double fx = 0, fy = 0, cx = 0, cy = 0;
  RigidTransform extrinsic;  // world -> camera

  /// Throws InvalidArgument when dimensions or intrinsics break the model invariants.
  void validate() const;

  Vec3 center() const { return extrinsic.inverse().translation; }
  /// Horizontal field of view implied by fx and width, degrees.
  double fov_h_deg() const;
};

struct PixelPoint {
  double u = 0, v = 0;
  double depth = 0;
};

/// fx = width / (2 tan(fov/2)), fy = fx, principal point at the image centre.
Intrinsics intrinsics_from_fov(double fov_h_deg, int width, int height);

/// World->camera transform for a camera at `position` looking at `target`, with
/// world +z as up. Looking straight up or down falls back to world +y as up.
RigidTransform look_at(const Vec3& position, const Vec3& target);

CameraModel make_camera(std::string id, const Vec3& position, const Vec3& target, double fov_h_deg, int width,
                        int height);

Vec3 world_to_camera(const CameraModel& cam, const Vec3& p);

/// nullopt when the point is at or behind the near plane.
std::optional<PixelPoint> project(const CameraModel& cam, const Vec3& p);

/// Inverse of project: the world point at `depth` along the ray through (u, v).
Vec3 unproject(const CameraModel& cam, const PixelPoint& pp);

bool in_frame(const CameraModel& cam, const std::optional<PixelPoint>& pp);

/// Unit world-space direction of the ray from the camera centre through (u, v).
Vec3 pixel_ray_direction(const CameraModel& cam, double u, double v);

/// Calibration document: K (3x3 row-major), extrinsic [R|t] (3x4 row-major),
/// width, height, fov_h_deg; all reals at 9 significant digits.
Json calibration_to_json(const CameraModel& cam);
CameraModel calibration_from_json(const Json& doc, const std::string& origin);

}  // namespace posegen::camera
