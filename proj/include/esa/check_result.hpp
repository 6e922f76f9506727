#pragma once

#include <cstdint>
#include <string>

namespace esa {

// Outcome of an invariant sweep; `witness` describes the first violation.
struct CheckResult {
  bool pass = true;
  std::uint64_t checked = 0;
  std::string witness;

  void fail(const std::string& why) {
    if (pass) witness = why;
    pass = false;
  }
};

}  // namespace esa
