#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gauss_lintel {

// Base class of every domain error thrown by this library.
class LintelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A Gauss word in which some symbol does not occur exactly twice.
class NotDoubleOccurrence : public LintelError {
 public:
  using LintelError::LintelError;
};

// A chord with an even endpoint difference. Such a chord encodes a diagram
// with an odd-degree interlacement vertex, which the lintel family excludes.
class C1Violation : public LintelError {
 public:
  using LintelError::LintelError;
};

// Chord endpoints are not exactly the set {0..2n-1}.
class InvalidLintel : public LintelError {
 public:
  using LintelError::LintelError;
};

class InvalidPermutation : public LintelError {
 public:
  using LintelError::LintelError;
};

class SizeMismatch : public LintelError {
 public:
  using LintelError::LintelError;
};

class OutOfRange : public LintelError {
 public:
  using LintelError::LintelError;
};

class SizeTooSmall : public LintelError {
 public:
  using LintelError::LintelError;
};

class SizeTooLarge : public LintelError {
 public:
  using LintelError::LintelError;
};

// Malformed textual input. `position` is a 0-based character offset into the
// offending line when known, npos otherwise.
class ParseError : public LintelError {
 public:
  explicit ParseError(const std::string& what,
                      std::size_t position = std::string::npos)
      : LintelError(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class IoError : public LintelError {
 public:
  using LintelError::LintelError;
};

}  // namespace gauss_lintel
