#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcpinfer {

/// Caller passed an argument outside an operation's domain.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a data-model invariant (e.g. a non-primitive word).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A problem instance is malformed for the requested construction.
class instance_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive search would exceed its configured cap.
class resource_error : public std::runtime_error {
 public:
  resource_error(const std::string& what, std::uint64_t cap)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}

  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t cap_;
};

}  // namespace lcpinfer
