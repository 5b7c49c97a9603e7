#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace htg {

enum class Errc {
  SelfLoop,
  DuplicateEdge,
  IndexOutOfRange,
  NotAnEdge,
  NOdd,
  NTooSmall,
  EllRange,
  ParityMismatch,
  DegenerateMultigraph,
  NotNormalForm,
  BadParameter,
  TooLarge,
  NotCubic,
  Graph6Format,
};

std::string_view errc_name(Errc code);

// Raised for every recoverable contract violation in the library. The code
// lets callers (and the CLI exit-code mapping) branch without string matching.
class HtgError : public std::runtime_error {
 public:
  HtgError(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace htg
