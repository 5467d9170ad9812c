#pragma once

#include <cmath>

#include <Eigen/Geometry>

namespace posegen {

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

/// Rotation followed by translation. No scale or shear.
struct RigidTransform {
  Quat rotation = Quat::Identity();
  Vec3 translation = Vec3::Zero();

  RigidTransform() = default;
  // Renormalizes only when the input drifts, so unit inputs pass through bit-exact.
  RigidTransform(const Quat& q, const Vec3& t) : rotation(q), translation(t) {
    if (std::abs(rotation.squaredNorm() - 1.0) > 1e-12) rotation.normalize();
  }

  static RigidTransform identity() { return {}; }
  static RigidTransform from_translation(const Vec3& t) { return {Quat::Identity(), t}; }
  static RigidTransform from_rotation(const Quat& q) { return {q, Vec3::Zero()}; }

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

  // (*this ∘ rhs)(p) = this->apply(rhs.apply(p))
  RigidTransform operator*(const RigidTransform& rhs) const {
    return {rotation * rhs.rotation, rotation * rhs.translation + translation};
  }

  RigidTransform inverse() const {
    const Quat inv = rotation.conjugate();
    return {inv, -(inv * translation)};
  }

  Mat4 matrix() const {
    Mat4 m = Mat4::Identity();
    m.topLeftCorner<3, 3>() = rotation.toRotationMatrix();
    m.topRightCorner<3, 1>() = translation;
    return m;
  }
};

/// Shortest-arc spherical interpolation; flips the sign of `b` when the dot product is negative.
Quat slerp_shortest(const Quat& a, const Quat& b, double s);

}  // namespace posegen
