#pragma once

#include <stdexcept>
#include <string>

namespace ordercraft {

// Malformed or inconsistent input (bad files, out-of-range ids, violated
// operation preconditions). CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured size or memory limit; we refuse instead of
// thrashing. CLI exit code 3.
class size_limit_error : public std::runtime_error {
 public:
  explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency assertion failed. Reaching this means a bug, not
// bad input. CLI exit code 4.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ordercraft
