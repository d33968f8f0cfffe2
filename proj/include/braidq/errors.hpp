// Copyright 2026 The braidq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidq {

// Every failure raised by the library derives from Error so callers can
// catch the family at once and still dispatch on the concrete kind.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Requested size exceeds a configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented precondition (Hermiticity, normalization, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Iterative method failed to converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

// Index outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Invalid argument combination.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; position is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        detail_(message),
        position_(position) {}

  const std::string& detail() const noexcept { return detail_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string detail_;
  std::size_t position_;
};

}  // namespace braidq
