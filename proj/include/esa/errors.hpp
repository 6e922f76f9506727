#pragma once

#include <stdexcept>
#include <string>

namespace esa {

// Argument outside the mathematical domain of an operation (bad level,
// label not in the graph, tuple longer than the depth, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of a checker does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested instance does not fit the configured block budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text (JSON, rational literal) could not be parsed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The normal-form reduction produced a family violating one of its
// conclusions. tag() names the violated condition ("suppz", "zdiff",
// "lfarz", "alphaN", "isometry").
class ReductionError : public std::runtime_error {
 public:
  ReductionError(std::string tag, const std::string& what)
      : std::runtime_error(tag + ": " + what), tag_(std::move(tag)) {}
  const std::string& tag() const { return tag_; }

 private:
  std::string tag_;
};

}  // namespace esa
