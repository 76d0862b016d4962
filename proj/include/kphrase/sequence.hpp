#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "kphrase/skeleton.hpp"

namespace kphrase {

using Pose = std::array<Eigen::Vector3d, kJointCount>;

/// A joint-position time series. Positions are meters in a right-handed
/// coordinate system; after normalization gravity points along -z.
struct SkeletonSequence {
  std::string id;
  double fps = 30.0;
  std::vector<Pose> frames;
  std::optional<std::string> text;

  int frameCount() const { return static_cast<int>(frames.size()); }
  double durationSeconds() const {
    return frames.empty() ? 0.0 : (frames.size() - 1) / fps;
  }
};

/// Per-frame egocentric (right, up, forward) unit vectors.
struct ReferenceFrameSeries {
  std::vector<Eigen::Vector3d> right;
  std::vector<Eigen::Vector3d> up;
  std::vector<Eigen::Vector3d> forward;

  int frameCount() const { return static_cast<int>(right.size()); }
};

/// Reads a sequence from the native JSON format (see docs/formats.md).
/// Throws ParseError on bad syntax, SchemaError when the joint list or
/// frame shape does not match the canonical skeleton, IoError when the
/// file cannot be opened.
SkeletonSequence loadSequence(const std::string& path);
SkeletonSequence readSequenceJson(std::istream& in, const std::string& origin);

/// Writes the native JSON format. Output bytes are deterministic.
void saveSequence(const SkeletonSequence& seq, const std::string& path);
void writeSequenceJson(const SkeletonSequence& seq, std::ostream& out);

/// Piecewise-linear resampling to target_fps. Endpoint frames are
/// preserved exactly when the source period divides the target period;
/// resampling at the native rate returns a bit-identical copy.
SkeletonSequence resample(const SkeletonSequence& seq, double target_fps);

/// Rotates the sequence by the minimal rotation that maps
/// normalize(gravity) onto (0,0,-1). Aligning an already-aligned
/// sequence is the identity.
SkeletonSequence gravityAlign(const SkeletonSequence& seq,
                              const Eigen::Vector3d& gravity);

/// Per-frame egocentric frames for a gravity-aligned sequence:
/// up = +z, right = the hip axis projected onto the horizontal plane,
/// forward = up x right. Throws DegenerateFrameError (with the frame
/// index) when the hips coincide or the hip axis is vertical.
ReferenceFrameSeries computeReferenceFrames(const SkeletonSequence& seq);

/// Reflects every pose across the sagittal plane of frame 0 (the plane
/// through the pelvis spanned by up and forward), then swaps each
/// left/right joint pair. An involution; symmetric poses are fixed points.
SkeletonSequence mirror(const SkeletonSequence& seq);

}  // namespace kphrase
