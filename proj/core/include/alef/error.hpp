#pragma once

#include <stdexcept>
#include <string>

namespace alef {

// File could not be opened / read / written.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data violates the expected format or an invariant.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configuration value violates a precondition.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace alef
