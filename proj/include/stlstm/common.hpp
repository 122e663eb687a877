#pragma once

#include <stdexcept>
#include <string>

namespace stlstm {

// Error hierarchy. The C API and the CLI map these onto stable codes:
// ConfigError -> 1, DataError -> 2, VerifyError -> 3, anything else -> 4.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class VerifyError : public std::runtime_error {
 public:
  explicit VerifyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stlstm
