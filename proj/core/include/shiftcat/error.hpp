#pragma once

#include <stdexcept>
#include <string>

namespace shiftcat {

enum class Errc {
  EmptyGraph,
  SourceVertex,
  SinkVertex,
  UnknownVertex,
  UnknownEdge,
  DuplicateVertex,
  DuplicateEdge,
  IllegalWord,
  IllegalCycle,
  DepthTooSmall,
  NotPrime,
  TrivialSet,
  NotApplicable,
  TooLarge,
  Syntax,
  Internal,
};

const char* errc_name(Errc code) noexcept;

/// All recoverable failures in the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Input text could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column, const std::string& what)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace shiftcat
