#ifndef NMLAB_ERROR_HPP
#define NMLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nmlab {

// User-level failure: malformed input, unknown atoms, exceeded size caps.
// The CLI maps these to exit code 1.
class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input text does not conform to the grammar.
class ParseError : public UserError {
 public:
  ParseError(const std::string& what, int line, int column)
      : UserError(what + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A fixed enumeration or size cap was exceeded. The message names the cap.
class CapError : public UserError {
 public:
  using UserError::UserError;
};

// Broken internal invariant. The CLI maps these to exit code 2.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nmlab

#endif  // NMLAB_ERROR_HPP
