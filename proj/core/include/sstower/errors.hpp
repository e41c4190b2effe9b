#pragma once

#include <stdexcept>
#include <string>

namespace sstower {

// Raised on violated preconditions and malformed input. The command-line
// driver maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sstower
