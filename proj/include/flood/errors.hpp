#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace flood {

// Raised when an exhaustive enumeration would exceed its configured cap.
// Enumeration caps are hard errors, never silent truncation.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::uint64_t needed, std::uint64_t cap)
      : std::runtime_error("enumeration needs " + std::to_string(needed) +
                           " objects, cap is " + std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::uint64_t needed() const { return needed_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t needed_;
  std::uint64_t cap_;
};

// Raised when a property that must hold on every instance is violated.
// Seeing this in CI means the implementation (or the input) is wrong.
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

// Rejection of a graph that is not connected or has an odd-degree vertex.
class NotEulerianError : public std::invalid_argument {
 public:
  NotEulerianError(std::string message, std::vector<int> offendingVertices,
                   bool disconnected)
      : std::invalid_argument(std::move(message)),
        offending_(std::move(offendingVertices)),
        disconnected_(disconnected) {}

  const std::vector<int>& offendingVertices() const { return offending_; }
  bool disconnected() const { return disconnected_; }

 private:
  std::vector<int> offending_;
  bool disconnected_;
};

}  // namespace flood
