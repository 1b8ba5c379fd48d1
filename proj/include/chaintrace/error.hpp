#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chaintrace {

enum class Errc {
  KTooSmall,
  FaceOutOfRange,
  DegenerateRectangle,
  NotACorner,
  ShapeMismatch,
  BadValue,
  EvaluationFailure,
  NotAGate,
  NotOnBoundary,
  MissingChain,
  SameColor,
  NotPeriodic,
  EmptySequence,
  BadEpsilon,
  EmptySet,
  UnknownCandidate,
  BadParams,
  NotBoundaryValued,
  BoundaryNotIdentity,
  BadInput,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chaintrace
