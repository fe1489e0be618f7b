#pragma once

#include <stdexcept>
#include <string>

namespace aperiodic {

// Raised for violated preconditions: malformed inputs, insufficient grid or
// window coverage, degenerate geometry.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace aperiodic
