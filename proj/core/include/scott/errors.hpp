#pragma once

#include <stdexcept>
#include <string>

namespace scott {

// Bad input, violated precondition, or failed validation. The CLI maps
// this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A broken internal invariant (e.g. a snap that should be unambiguous is
// not). The CLI maps this to exit code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace scott
