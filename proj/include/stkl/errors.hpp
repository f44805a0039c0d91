#pragma once

#include <stdexcept>
#include <string>

namespace stkl {

// Base for every input or contract violation raised by the library.
// The CLI catches Error for user-facing diagnostics; anything else is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NotATreeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptySetError : public Error {
 public:
  using Error::Error;
};

class BadSetSizeError : public Error {
 public:
  using Error::Error;
};

class KTooLargeError : public Error {
 public:
  using Error::Error;
};

class BadRangeError : public Error {
 public:
  using Error::Error;
};

class BadSignatureError : public Error {
 public:
  using Error::Error;
};

class DiameterChangedError : public Error {
 public:
  using Error::Error;
};

class InvalidFormError : public Error {
 public:
  using Error::Error;
};

class InvalidSiteError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace stkl
