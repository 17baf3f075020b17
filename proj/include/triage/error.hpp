#pragma once

#include <stdexcept>
#include <string>

namespace triage {

enum class ErrorKind {
  Io,            // file missing or unreadable
  Parse,         // malformed input record
  Validation,    // well-formed input that breaks a contract
  Precondition,  // caller violated an operation's precondition
  Version,       // model file written by an incompatible format version
  Corrupt,       // model file truncated or structurally invalid
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return "io";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Version: return "version";
    case ErrorKind::Corrupt: return "corrupt";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace triage
