#pragma once

#include <stdexcept>
#include <string>

namespace derange {

// Bad arguments or an unsupported combination; the CLI maps this to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Enumeration size guard tripped.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Series with zero constant term passed to inverse().
struct SingularSeriesError : std::domain_error {
  using std::domain_error::domain_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

}  // namespace derange
