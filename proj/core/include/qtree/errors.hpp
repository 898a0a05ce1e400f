#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtree {

// Invalid parameters for a generator, operation, or experiment config.
class ParamError : public std::invalid_argument {
 public:
  explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// A value outside the valid domain at call time (e.g. vertex id >= n).
class InputError : public std::out_of_range {
 public:
  explicit InputError(const std::string& what) : std::out_of_range(what) {}
};

// Randomized construction exhausted its retry budget.
class GenerationError : public std::runtime_error {
 public:
  GenerationError(const std::string& what, std::uint64_t attempts)
      : std::runtime_error(what + " (after " + std::to_string(attempts) +
                           " attempts)"),
        attempts_(attempts) {}

  std::uint64_t attempts() const { return attempts_; }

 private:
  std::uint64_t attempts_;
};

// Malformed input file. line() is 1-based; 0 means "no specific line".
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qtree
