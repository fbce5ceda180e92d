#pragma once

#include <stdexcept>
#include <string>

namespace fbcs {

/// A value lies outside the range an operation accepts (e.g. a CS coordinate above 1).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An argument is outside an operation's mathematical domain (non-finite input, bad parameter).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Grid dimensions are unusable: empty, too small for a stencil, or mismatched.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A file does not match the format it claims to be.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reading or writing a file failed at the OS level.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fbcs
