#ifndef CYCLERING_ERRORS_HPP
#define CYCLERING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclering {

// Unsigned 64-bit arithmetic that would wrap around. Never silent.
class overflow_error : public std::runtime_error {
 public:
  explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// An input exceeds a documented capability bound (trial-division cap,
// oracle vertex cap, counting cap, ...). The request is well-formed but
// too large for the implemented method.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Syntax or semantic error in expression text, with 1-based position.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace cyclering

#endif  // CYCLERING_ERRORS_HPP
