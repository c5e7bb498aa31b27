#ifndef JDEBLOCK_ERRORS_H_
#define JDEBLOCK_ERRORS_H_

#include <stdexcept>
#include <string>

namespace jdeblock {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes do not follow the expected container syntax.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Well-formed input using a feature this library does not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Input ended before the declared payload was complete.
class TruncatedError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation (bad quality, size mismatch...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace jdeblock

#endif  // JDEBLOCK_ERRORS_H_
