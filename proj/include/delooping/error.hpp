#pragma once

#include <stdexcept>
#include <string>

namespace dl {

enum class ErrorKind {
  ParseError,
  ValidationError,
  NonGradedRelation,
  NotAdmissible,
  InvalidArrow,
  CharTooSmall,
  NoSplitFound,
  NotExact,
  GraphTruncated,
  MethodUnavailable,
  NotMonomial,
  ConditionsFail,
  Usage,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dl
