#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chromagraph {

enum class ErrorKind {
  Parse,
  UnsupportedSize,
  BudgetExceeded,
  InvalidArgument,
  NotAColouringGraph,
  AmbiguousMajority,
  InconsistentFans,
  SingularPoint,
  InvalidCopy,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports goes through this type so the CLI can
// render it as {kind, detail}.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view kind_name() const { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace chromagraph
