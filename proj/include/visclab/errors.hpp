#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace visclab {

// Malformed experiment configuration or a domain too small for the run.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Non-finite state detected while time stepping.
class BlowupError : public std::runtime_error {
 public:
  explicit BlowupError(double t)
      : std::runtime_error("numerical blowup at t = " + std::to_string(t)), t_(t) {}
  double time() const noexcept { return t_; }

 private:
  double t_;
};

// Series unusable for exponent fitting (too few samples, nonpositive values, short span).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace visclab
