#pragma once

#include <array>
#include <string_view>

#include <Eigen/Core>

namespace kphrase {

/// Canonical 17-joint skeleton. Index 0 is the pelvis/root joint; the
/// ordering below is the wire order used by every file format and array
/// in this library.
enum JointId : int {
  kPelvis = 0,
  kLeftHip = 1,
  kRightHip = 2,
  kLeftKnee = 3,
  kRightKnee = 4,
  kLeftAnkle = 5,
  kRightAnkle = 6,
  kNeck = 7,
  kHead = 8,
  kLeftEye = 9,
  kRightEye = 10,
  kLeftShoulder = 11,
  kRightShoulder = 12,
  kLeftElbow = 13,
  kRightElbow = 14,
  kLeftWrist = 15,
  kRightWrist = 16,
};

inline constexpr int kJointCount = 17;

/// Machine names, in wire order. Sequence files must list exactly these.
inline constexpr std::array<std::string_view, kJointCount> kJointNames = {
    "pelvis",     "l_hip",      "r_hip",   "l_knee",     "r_knee",
    "l_ankle",    "r_ankle",    "neck",    "head",       "l_eye",
    "r_eye",      "l_shoulder", "r_shoulder", "l_elbow", "r_elbow",
    "l_wrist",    "r_wrist"};

/// Human-readable names used by phrase descriptions. Wrists read as
/// "hand" because that is how the resulting sentences are worded.
inline constexpr std::array<std::string_view, kJointCount> kJointDisplayNames = {
    "pelvis",        "left hip",       "right hip",      "left knee",
    "right knee",    "left ankle",     "right ankle",    "neck",
    "head",          "left eye",       "right eye",      "left shoulder",
    "right shoulder", "left elbow",    "right elbow",    "left hand",
    "right hand"};

/// left<->right counterpart of each joint (central joints map to themselves).
inline constexpr std::array<int, kJointCount> kMirrorJoint = {
    kPelvis,        kRightHip,     kLeftHip,      kRightKnee,  kLeftKnee,
    kRightAnkle,    kLeftAnkle,    kNeck,         kHead,       kRightEye,
    kLeftEye,       kRightShoulder, kLeftShoulder, kRightElbow, kLeftElbow,
    kRightWrist,    kLeftWrist};

/// The 12 joints eligible for Position Phrases: everything except the
/// pelvis, both eyes and both hips.
inline constexpr std::array<int, 12> kMovementJoints = {
    kLeftKnee,  kRightKnee,  kLeftAnkle, kRightAnkle,
    kNeck,      kHead,       kLeftShoulder, kRightShoulder,
    kLeftElbow, kRightElbow, kLeftWrist, kRightWrist};

/// Canonical static T-pose, meters. Pelvis at the origin, hips on the
/// x axis, body facing +y, gravity along -z. Proportions approximate a
/// 1.7 m stature; fixtures only need plausible, non-degenerate geometry.
inline std::array<Eigen::Vector3d, kJointCount> restPose() {
  using V = Eigen::Vector3d;
  return {
      V(0.00, 0.00, 0.00),    // pelvis
      V(-0.11, 0.00, 0.00),   // l_hip
      V(0.11, 0.00, 0.00),    // r_hip
      V(-0.11, 0.00, -0.45),  // l_knee
      V(0.11, 0.00, -0.45),   // r_knee
      V(-0.11, 0.00, -0.90),  // l_ankle
      V(0.11, 0.00, -0.90),   // r_ankle
      V(0.00, 0.00, 0.55),    // neck
      V(0.00, 0.00, 0.72),    // head
      V(-0.03, 0.08, 0.75),   // l_eye
      V(0.03, 0.08, 0.75),    // r_eye
      V(-0.18, 0.00, 0.50),   // l_shoulder
      V(0.18, 0.00, 0.50),    // r_shoulder
      V(-0.46, 0.00, 0.50),   // l_elbow
      V(0.46, 0.00, 0.50),    // r_elbow
      V(-0.72, 0.00, 0.50),   // l_wrist
      V(0.72, 0.00, 0.50),    // r_wrist
  };
}

/// Index of a joint machine name, or -1 if unknown.
int jointIndexByName(std::string_view name);

}  // namespace kphrase
