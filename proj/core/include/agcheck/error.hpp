#ifndef AGCHECK_ERROR_HPP_
#define AGCHECK_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace agcheck {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A precondition of an operation was violated (empty subset where a
  //! nonempty one is required, order mismatch, enumeration cap exceeded, ...).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! Malformed table, fuzzy or checkpoint text.  Line and column are 1-based;
  //! a column of 0 means the whole line.
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), _line(line), _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }

    std::size_t column() const noexcept {
      return _column;
    }

   private:
    static std::string format(std::string const& message,
                              std::size_t        line,
                              std::size_t        column) {
      std::string out = "line " + std::to_string(line);
      if (column != 0) {
        out += ", column " + std::to_string(column);
      }
      return out + ": " + message;
    }

    std::size_t _line;
    std::size_t _column;
  };

}  // namespace agcheck

#endif  // AGCHECK_ERROR_HPP_
