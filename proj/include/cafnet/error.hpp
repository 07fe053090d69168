#pragma once
#include <stdexcept>
#include <string>

namespace cafnet {

// Exit-code contract for the CLI: 2 config, 3 I/O, 4 missing inputs,
// 5 numeric failure, 6 checkpoint mismatch.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CheckpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cafnet
