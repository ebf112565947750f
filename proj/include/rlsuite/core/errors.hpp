#pragma once

#include <stdexcept>
#include <string>

namespace rlsuite {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RLSUITE_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

RLSUITE_DEFINE_ERROR(DuplicateId);
RLSUITE_DEFINE_ERROR(UnknownScenario);
RLSUITE_DEFINE_ERROR(InvalidAction);
RLSUITE_DEFINE_ERROR(SteppedTerminalEnv);
RLSUITE_DEFINE_ERROR(InvalidConfig);
RLSUITE_DEFINE_ERROR(UnsupportedMode);
RLSUITE_DEFINE_ERROR(InsufficientGold);
RLSUITE_DEFINE_ERROR(InvalidArgument);

// neural
RLSUITE_DEFINE_ERROR(ShapeMismatch);
RLSUITE_DEFINE_ERROR(UnknownActivation);
RLSUITE_DEFINE_ERROR(NoForwardCache);

// agents
RLSUITE_DEFINE_ERROR(EmptyBatch);
RLSUITE_DEFINE_ERROR(EmptyBuffer);

// analysis
RLSUITE_DEFINE_ERROR(InvalidSpec);

#undef RLSUITE_DEFINE_ERROR

/// Parse or validation failure in a text config, carrying the 1-based line.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace rlsuite
