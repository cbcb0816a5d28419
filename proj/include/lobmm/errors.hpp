#pragma once

#include <stdexcept>
#include <string>

namespace lobmm {

// Malformed or inconsistent input data (CSV series, logs). CLI exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration or model document. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grid or memory bound exceeded. CLI exit code 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Policy artifact does not belong to the model it is used with. CLI exit code 4.
class ArtifactMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lobmm
