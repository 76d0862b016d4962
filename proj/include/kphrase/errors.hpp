#pragma once

#include <stdexcept>
#include <string>

namespace kphrase {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file (bad syntax, unparseable numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid file that violates the expected schema
/// (wrong joint count, unknown field values, bad shapes).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument to an operation (non-positive fps, zero gravity, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Filesystem-level failure (missing file, unwritable output).
class IoError : public Error {
 public:
  using Error::Error;
};

/// A frame where the egocentric reference frame is undefined.
class DegenerateFrameError : public Error {
 public:
  DegenerateFrameError(const std::string& what, int frame)
      : Error(what), frame_(frame) {}
  int frame() const { return frame_; }

 private:
  int frame_ = -1;
};

/// Unknown phrase id / invalid category lookup.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// A knowledge-base index that references data which is not on disk.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace kphrase
