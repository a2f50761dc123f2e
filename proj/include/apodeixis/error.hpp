#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apodeixis {

/// Byte offsets [begin, end) into a parsed input.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, SourceSpan span)
      : Error(what + " at " + std::to_string(span.begin) + ".." + std::to_string(span.end)),
        span_(span) {}

  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

/// Model JSON that does not match the schema. `path()` names the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& what)
      : Error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Evaluation against a model that lacks a concept, or an unsupported statement shape.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Enumeration bounds that are malformed or exceed the search-space guard.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// A catalog fixture that does not play its advertised role.
class FixtureError : public Error {
 public:
  using Error::Error;
};

}  // namespace apodeixis
