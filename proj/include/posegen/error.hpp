#pragma once

#include <stdexcept>
#include <string>

namespace posegen {

// Malformed or inconsistent input documents (rigs, clips, meshes, configs).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failures reading or writing dataset files, or data that contradicts itself.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations on in-memory values (bad arguments, shape mismatch).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace posegen
