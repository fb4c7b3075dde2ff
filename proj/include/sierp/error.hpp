#pragma once

#include <stdexcept>
#include <string>

namespace sierp {

enum class Errc {
  Loop,
  Malformed,
  UnknownLabel,
  UnknownEdge,
  Overflow,
  ArityMismatch,
  NotAutomorphism,
  NotBijective,
  NotInTilde,
  NotSubgroup,
  Disconnected,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

// Every failure in the library is reported through this type; `code()` lets
// callers (and the CLI) distinguish error classes without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sierp
