#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sbw {

enum class ErrorCode {
  NonAssociative,
  NoIdentity,
  NotClosed,
  OrderLimitExceeded,
  NotNormal,
  MixedParents,
  NotAProduct,
  ConditionViolated,
  MiddleMismatch,
  SpaceMismatch,
  NotSubgroup,
  NotIso,
  NotInPoset,
  AxiomFailed,
  NotAutomorphism,
  PartitionMismatch,
  IncompleteCatalog,
  DecompositionMismatch,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code and,
/// for ConditionViolated, the tag of the first failed section condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::string tag = {})
      : std::runtime_error(what), code_(code), tag_(std::move(tag)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& tag() const noexcept { return tag_; }

 private:
  ErrorCode code_;
  std::string tag_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what,
                              std::string tag = {}) {
  throw Error(code, what, std::move(tag));
}

}  // namespace sbw
