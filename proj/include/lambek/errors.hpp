// Copyright 2026 The lambek-delta Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LAMBEK_ERRORS_HPP_
#define LAMBEK_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambek {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or lexicon text. `position` is a 0-based character
/// offset for formulas and a 1-based line number for lexicon files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownAtomError : public Error {
 public:
  using Error::Error;
};

class UnknownWordError : public Error {
 public:
  using Error::Error;
};

/// Tensor shapes, slot counts or space signatures that do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidProofError : public Error {
 public:
  using Error::Error;
};

/// Raised when a space or matrix would exceed the configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace lambek

#endif  // LAMBEK_ERRORS_HPP_
