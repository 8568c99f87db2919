#pragma once

#include <stdexcept>
#include <string>

namespace chaoslab {

// Bad or inconsistent experiment configuration. The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// A solver left its validity envelope: non-finite state, CFL violation, mass
// drift, or initial data outside the assumed positivity envelope. Exit code 3.
class NumericalAbort : public std::runtime_error {
 public:
  explicit NumericalAbort(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace chaoslab
