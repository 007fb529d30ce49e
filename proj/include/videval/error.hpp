// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace videval {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file: carries file/line context in the message.
struct ParseError : Error {
  using Error::Error;
};

/// Semantically invalid data (invariant violations, inconsistent inputs).
struct DataError : Error {
  using Error::Error;
};

}  // namespace videval
