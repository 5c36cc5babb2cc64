#pragma once

#include <stdexcept>
#include <string>

namespace egostat {

// Thrown when a statistic has no defined value on the given input
// (edgeless graph, zero degree variance, no triangles). Callers that
// render reports catch this and emit an explicit null-with-reason.
class undefined_metric_error : public std::runtime_error {
 public:
  explicit undefined_metric_error(const std::string& what)
      : std::runtime_error(what) {}
};

class argument_error : public std::invalid_argument {
 public:
  explicit argument_error(const std::string& what)
      : std::invalid_argument(what) {}
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class insufficient_data_error : public std::runtime_error {
 public:
  explicit insufficient_data_error(const std::string& what)
      : std::runtime_error(what) {}
};

class degenerate_fit_error : public std::runtime_error {
 public:
  explicit degenerate_fit_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace egostat
