#pragma once

#include <string>

namespace amalgam {

/// Outcome of a mechanical check. `info` marks results the underlying
/// statement makes no claim about.
enum class Status { pass, fail, info };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
  }
  return "?";
}

inline Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

}  // namespace amalgam
