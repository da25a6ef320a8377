#pragma once

#include <string>

namespace symchar {

/// Outcome of a bounded exhaustive property check.  On failure `witness`
/// names the first offending basis tuple.
struct CheckResult {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }
  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string w) { return {false, std::move(w)}; }
};

} // namespace symchar
