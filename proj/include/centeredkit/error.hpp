//  Copyright 2026 The centeredkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef CENTEREDKIT_ERROR_HPP_
#define CENTEREDKIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centeredkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments or documents, or a violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A request that would exceed a configured enumeration limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Document parse failure with a 1-based text position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " +
                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace centeredkit

#endif  // CENTEREDKIT_ERROR_HPP_
