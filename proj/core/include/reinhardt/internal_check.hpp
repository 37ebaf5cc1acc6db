#pragma once
// Always-on internal invariant checks. These guard conclusions that are
// mathematically guaranteed; a failure means a bug, not bad input, so they
// throw std::logic_error and stay active in release builds.

#include <stdexcept>
#include <string>

namespace reinhardt::detail {

inline void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

}  // namespace reinhardt::detail
