// Copyright 2026 The selforg Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace selforg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested item is not a member of the list. When raised while serving a
/// sequence, `request_index()` holds the 0-based index of the offending request.
class ItemNotInListError : public Error {
 public:
  explicit ItemNotInListError(const std::string& what,
                              std::size_t request_index = npos)
      : Error(what), request_index_(request_index) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t request_index() const noexcept { return request_index_; }
  bool has_request_index() const noexcept { return request_index_ != npos; }

 private:
  std::size_t request_index_;
};

/// A free exchange was asked to move an item backwards.
class TargetBehindCurrentError : public Error {
 public:
  using Error::Error;
};

/// Out-of-domain argument: n < 1, k < 0, malformed range, unsupported enumerant.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// A claimed permutation has a duplicate or missing item.
class NotAPermutationError : public InvalidParameterError {
 public:
  using InvalidParameterError::InvalidParameterError;
};

/// Cost arithmetic left the signed 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A closed-form evaluation produced a non-integral value.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

}  // namespace selforg
