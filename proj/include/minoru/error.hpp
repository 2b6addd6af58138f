#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace minoru {

enum class ErrorKind {
  kMalformedRotation,
  kDisconnected,
  kSignatureMismatch,
  kBadSignature,
  kBadM,
  kNotASideEdge,
  kInvalidEmbedding,
  kCannotAvoidCorner,
  kForestMismatch,
  kMissingAnchorFrame,
  kSeparatingCircuit,
  kTooSmallCircuit,
  kAnchorIsCorner,
  kEdgeAnchorViolation,
  kTwinIsEdgeAnchor,
  kSideTooLong,
  kNotOuterplanar,
  kSpanViolation,
  kDomainMismatch,
  kTooLarge,
  kParse,
  kUnknownKind,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace minoru
