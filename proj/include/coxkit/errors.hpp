#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed `.cox` input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its domain (unknown vertex, wrong face
/// dimension, hypothesis of a counting lemma not met, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A combinatorial enumeration hit its configured limit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t depth)
      : Error(what + " (cap " + std::to_string(cap) + ", depth reached " +
              std::to_string(depth) + ")"),
        cap_(cap),
        depth_(depth) {}
  std::size_t cap() const { return cap_; }
  std::size_t depth() const { return depth_; }

 private:
  std::size_t cap_;
  std::size_t depth_;
};

}  // namespace coxkit
