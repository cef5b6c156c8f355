#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parastab {

/// Malformed or out-of-domain input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded (CLI exit code 3). `completed` is the
/// amount of work finished before the cap was hit.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t completed)
      : std::runtime_error(what), completed_(completed) {}

  std::size_t completed() const noexcept { return completed_; }

 private:
  std::size_t completed_;
};

inline constexpr std::size_t kDefaultCap = 1'000'000;

}  // namespace parastab
