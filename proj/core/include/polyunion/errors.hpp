#pragma once

#include <stdexcept>
#include <string>

namespace polyunion {

/// Caller supplied something outside an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction or certificate could not be completed (scaling cap,
/// candidate exhaustion, failed certificate).
class ConstructionError : public std::runtime_error {
 public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polyunion
