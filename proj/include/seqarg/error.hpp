#ifndef SEQARG_ERROR_HPP
#define SEQARG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace seqarg {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& found)
      : Error("syntax error at byte " + std::to_string(offset) + ": expected " + expected +
              ", found " + found),
        offset_(offset),
        expected_(std::move(expected)),
        found_(found) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

// Malformed problem file; `line` is 1-based, 0 when no line applies.
class InputError : public Error {
 public:
  InputError(std::size_t line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An input exceeds one of the configured enumeration caps.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A query formula is missing from the conclusion pool of the universe it is
// evaluated against; the universe must be rebuilt with the query in the pool.
class PoolMissError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Input data violates a structural requirement (inconsistent strict set,
// overlapping premise sets, unmapped assumption, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace seqarg

#endif  // SEQARG_ERROR_HPP
