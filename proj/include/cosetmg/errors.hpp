#pragma once

#include <stdexcept>
#include <string>

namespace cosetmg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size limit was exceeded. Always a hard error, never a
// silent truncation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cosetmg
