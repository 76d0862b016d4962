#include "kphrase/sequence.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Geometry>
#include <nlohmann/json.hpp>

#include "kphrase/errors.hpp"

namespace kphrase {

namespace {

using nlohmann::json;

constexpr double kDegenerateEps = 1e-9;

void requireFinite(const Eigen::Vector3d& v, int frame, int joint) {
  if (!v.allFinite()) {
    throw SchemaError("non-finite coordinate at frame " + std::to_string(frame) +
                      ", joint " + std::string(kJointNames[joint]));
  }
}

}  // namespace

int jointIndexByName(std::string_view name) {
  for (int i = 0; i < kJointCount; ++i) {
    if (kJointNames[i] == name) return i;
  }
  return -1;
}

SkeletonSequence readSequenceJson(std::istream& in, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }

  if (!doc.is_object()) throw SchemaError(origin + ": top level must be an object");
  for (const char* field : {"id", "fps", "joint_names", "frames"}) {
    if (!doc.contains(field)) {
      throw SchemaError(origin + ": missing field '" + field + "'");
    }
  }

  SkeletonSequence seq;
  if (!doc["id"].is_string()) throw SchemaError(origin + ": 'id' must be a string");
  seq.id = doc["id"].get<std::string>();

  if (!doc["fps"].is_number()) throw SchemaError(origin + ": 'fps' must be a number");
  seq.fps = doc["fps"].get<double>();
  if (!(seq.fps > 0.0) || !std::isfinite(seq.fps)) {
    throw SchemaError(origin + ": 'fps' must be positive and finite");
  }

  const auto& names = doc["joint_names"];
  if (!names.is_array() || names.size() != kJointCount) {
    // Name the first joint we expected but did not find, so a 16-joint
    // file produces an actionable message.
    std::string missing;
    for (int i = 0; i < kJointCount; ++i) {
      bool found = false;
      if (names.is_array()) {
        for (const auto& n : names) {
          if (n.is_string() && n.get<std::string>() == kJointNames[i]) {
            found = true;
            break;
          }
        }
      }
      if (!found) {
        missing = std::string(kJointNames[i]);
        break;
      }
    }
    std::ostringstream msg;
    msg << origin << ": expected " << kJointCount << " joint names, got "
        << (names.is_array() ? names.size() : 0);
    if (!missing.empty()) msg << " (missing '" << missing << "')";
    throw SchemaError(msg.str());
  }
  for (int i = 0; i < kJointCount; ++i) {
    if (!names[i].is_string() || names[i].get<std::string>() != kJointNames[i]) {
      throw SchemaError(origin + ": joint_names[" + std::to_string(i) +
                        "] must be '" + std::string(kJointNames[i]) + "'");
    }
  }

  const auto& frames = doc["frames"];
  if (!frames.is_array()) throw SchemaError(origin + ": 'frames' must be an array");
  seq.frames.reserve(frames.size());
  int f = 0;
  for (const auto& frame : frames) {
    if (!frame.is_array() || frame.size() != kJointCount) {
      throw SchemaError(origin + ": frame " + std::to_string(f) + " must hold " +
                        std::to_string(kJointCount) + " joints");
    }
    Pose pose;
    for (int j = 0; j < kJointCount; ++j) {
      const auto& p = frame[j];
      if (!p.is_array() || p.size() != 3 || !p[0].is_number() ||
          !p[1].is_number() || !p[2].is_number()) {
        throw SchemaError(origin + ": frame " + std::to_string(f) + ", joint " +
                          std::string(kJointNames[j]) + " must be [x,y,z]");
      }
      pose[j] = Eigen::Vector3d(p[0].get<double>(), p[1].get<double>(),
                                p[2].get<double>());
      requireFinite(pose[j], f, j);
    }
    seq.frames.push_back(pose);
    ++f;
  }

  if (doc.contains("text")) {
    if (!doc["text"].is_string()) throw SchemaError(origin + ": 'text' must be a string");
    seq.text = doc["text"].get<std::string>();
  }
  return seq;
}

SkeletonSequence loadSequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sequence file: " + path);
  return readSequenceJson(in, path);
}

void writeSequenceJson(const SkeletonSequence& seq, std::ostream& out) {
  json doc;
  doc["id"] = seq.id;
  doc["fps"] = seq.fps;
  json names = json::array();
  for (auto n : kJointNames) names.push_back(std::string(n));
  doc["joint_names"] = names;
  json frames = json::array();
  for (const Pose& pose : seq.frames) {
    json frame = json::array();
    for (const auto& p : pose) frame.push_back({p.x(), p.y(), p.z()});
    frames.push_back(std::move(frame));
  }
  doc["frames"] = std::move(frames);
  if (seq.text) doc["text"] = *seq.text;
  out << doc.dump(1) << "\n";
}

void saveSequence(const SkeletonSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write sequence file: " + path);
  writeSequenceJson(seq, out);
  if (!out) throw IoError("failed while writing: " + path);
}

SkeletonSequence resample(const SkeletonSequence& seq, double target_fps) {
  if (!(target_fps > 0.0) || !std::isfinite(target_fps)) {
    throw ArgumentError("resample: target fps must be positive");
  }
  if (seq.frameCount() < 2) {
    throw ArgumentError("resample: need at least 2 frames");
  }

  const double duration = seq.durationSeconds();
  const int out_frames =
      static_cast<int>(std::floor(duration * target_fps + 1e-9)) + 1;

  SkeletonSequence out;
  out.id = seq.id;
  out.text = seq.text;
  out.fps = target_fps;
  out.frames.resize(out_frames);

  const double step = seq.fps / target_fps;  // source frames per output frame
  const int last = seq.frameCount() - 1;
  for (int k = 0; k < out_frames; ++k) {
    double src = k * step;
    if (src > last) src = last;
    const int i = std::min(static_cast<int>(src), last - 1);
    const double w = src - i;
    Pose& pose = out.frames[k];
    const Pose& a = seq.frames[i];
    const Pose& b = seq.frames[i + 1];
    for (int j = 0; j < kJointCount; ++j) {
      pose[j] = a[j] * (1.0 - w) + b[j] * w;
    }
  }
  return out;
}

SkeletonSequence gravityAlign(const SkeletonSequence& seq,
                              const Eigen::Vector3d& gravity) {
  if (!gravity.allFinite() || gravity.norm() == 0.0) {
    throw ArgumentError("gravity_align: gravity vector must be nonzero and finite");
  }
  const Eigen::Vector3d target(0.0, 0.0, -1.0);
  const Eigen::Quaterniond q =
      Eigen::Quaterniond::FromTwoVectors(gravity.normalized(), target);
  const Eigen::Matrix3d rot = q.toRotationMatrix();

  SkeletonSequence out = seq;
  for (Pose& pose : out.frames) {
    for (auto& p : pose) p = rot * p;
  }
  return out;
}

ReferenceFrameSeries computeReferenceFrames(const SkeletonSequence& seq) {
  ReferenceFrameSeries rf;
  const int t = seq.frameCount();
  rf.right.resize(t);
  rf.up.resize(t);
  rf.forward.resize(t);
  const Eigen::Vector3d up(0.0, 0.0, 1.0);
  for (int i = 0; i < t; ++i) {
    const Eigen::Vector3d hip_axis =
        seq.frames[i][kRightHip] - seq.frames[i][kLeftHip];
    if (hip_axis.norm() < kDegenerateEps) {
      throw DegenerateFrameError(
          "coincident hips at frame " + std::to_string(i), i);
    }
    Eigen::Vector3d horiz = hip_axis - hip_axis.dot(up) * up;
    if (horiz.norm() < kDegenerateEps) {
      throw DegenerateFrameError(
          "hip axis parallel to gravity at frame " + std::to_string(i), i);
    }
    rf.up[i] = up;
    rf.right[i] = horiz.normalized();
    rf.forward[i] = up.cross(rf.right[i]).normalized();
  }
  return rf;
}

SkeletonSequence mirror(const SkeletonSequence& seq) {
  if (seq.frames.empty()) throw ArgumentError("mirror: empty sequence");
  const ReferenceFrameSeries rf = computeReferenceFrames(seq);
  const Eigen::Vector3d n = rf.right[0];
  const Eigen::Vector3d origin = seq.frames[0][kPelvis];

  SkeletonSequence out = seq;
  for (std::size_t f = 0; f < seq.frames.size(); ++f) {
    Pose reflected;
    for (int j = 0; j < kJointCount; ++j) {
      const Eigen::Vector3d& p = seq.frames[f][j];
      reflected[j] = p - 2.0 * (p - origin).dot(n) * n;
    }
    for (int j = 0; j < kJointCount; ++j) {
      out.frames[f][j] = reflected[kMirrorJoint[j]];
    }
  }
  return out;
}

}  // namespace kphrase
