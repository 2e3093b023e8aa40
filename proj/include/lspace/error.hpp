#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lspace {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input text; line() is 1-based, 0 when unknown.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  // An operation was called on input that violates its precondition.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A construction would produce a presentation of the empty shift.
  class EmptyLanguageError : public Error {
   public:
    using Error::Error;
  };

  // A configured size or depth bound was exceeded.
  class LimitError : public Error {
   public:
    using Error::Error;
  };

  // A construction produced a result contradicting one of its own invariants.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace lspace
