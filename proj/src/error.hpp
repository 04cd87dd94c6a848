#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gapkit {

enum class ErrorCode {
  Parse,            // malformed input text
  InvalidArgument,  // precondition violated
  BudgetExceeded,   // enumeration / size budget hit
  Construction,     // a construction cannot be realized or certified
  Internal,         // invariant broken inside the library
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_parse(const std::string& m) {
  throw Error(ErrorCode::Parse, m);
}
[[noreturn]] inline void throw_invalid(const std::string& m) {
  throw Error(ErrorCode::InvalidArgument, m);
}
[[noreturn]] inline void throw_budget(const std::string& m) {
  throw Error(ErrorCode::BudgetExceeded, m);
}
[[noreturn]] inline void throw_construction(const std::string& m) {
  throw Error(ErrorCode::Construction, m);
}
[[noreturn]] inline void throw_internal(const std::string& m) {
  throw Error(ErrorCode::Internal, m);
}

}  // namespace gapkit
