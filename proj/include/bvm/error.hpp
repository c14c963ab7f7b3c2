#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bvm {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed BVD text, trapezoid text, path syntax or binary word.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based; 0 when the input is not line-oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A structurally invalid diagram where a valid one is required.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Edge does not attach to the end of a path, or a path would exceed the
// truncation depth of its diagram.
class AdjacencyError : public Error {
 public:
  using Error::Error;
};

// A word is too short for the determined range of the requested row.
class WordTooShort : public Error {
 public:
  using Error::Error;
};

// Reading a trapezoid needs cells or marker bits outside the determined part
// of the input. The caller must enlarge the word.
class InsufficientWindow : public Error {
 public:
  using Error::Error;
};

// Vertex labels of a built diagram do not agree with its edges.
class LabelError : public Error {
 public:
  using Error::Error;
};

}  // namespace bvm
