// Copyright The archkit Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace archkit {

enum class ErrorCode {
  InvalidArgument = 1,
  Io = 2,
  Format = 3,
  Runtime = 4,
};

/// Exception carrying an error code that maps 1:1 onto the C API status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what);
}
[[noreturn]] inline void throw_io(const std::string& what) { throw Error(ErrorCode::Io, what); }
[[noreturn]] inline void throw_format(const std::string& what) {
  throw Error(ErrorCode::Format, what);
}
[[noreturn]] inline void throw_runtime(const std::string& what) {
  throw Error(ErrorCode::Runtime, what);
}

#define ARCHKIT_REQUIRE(cond, msg)          \
  do {                                      \
    if (!(cond)) ::archkit::throw_invalid(msg); \
  } while (0)

}  // namespace archkit
