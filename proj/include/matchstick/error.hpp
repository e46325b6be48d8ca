#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchstick {

enum class ErrorCode {
  InvalidGraph,
  InvalidArgument,
  IndexOutOfRange,
  ProfileNotApplicable,
  MalformedLine,
  MissingMetadata,
  AmbiguousMerge,
  DegenerateSegment,
  ZeroLengthEdge,
  DisconnectedGraph,
  WrongDegree,
  VertexOnAxis,
  InvalidPlan,
  RealizationFailed,
  NotFound,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure tied to a 1-based input line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace matchstick
