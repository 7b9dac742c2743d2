#pragma once

#include <stdexcept>
#include <string>

namespace regionloc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input files.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace regionloc
