#pragma once

#include <stdexcept>
#include <string>

namespace dlspec {

enum class ErrorKind {
  BadOrder,
  BadParams,
  SelfLoop,
  VertexOutOfRange,
  EdgeExists,
  EdgeAbsent,
  Disconnected,
  DegreeTooSmall,
  TooLarge,
  MalformedGraph6,
  DimensionMismatch,
  ZeroVector,
  NoConvergence,
  PreconditionViolated,
  UnknownLemma,
  ParseError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace dlspec
