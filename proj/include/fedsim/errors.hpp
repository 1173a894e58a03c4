#pragma once

#include <stdexcept>
#include <string>

namespace fedsim {

// Config-file problems: unknown keys, bad values, missing files. Exit code 2.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Data integrity problems: malformed manifests, id collisions. Exit code 3.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fedsim
