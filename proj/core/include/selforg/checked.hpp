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

#include <cstdint>
#include <string>

#include "selforg/error.hpp"

namespace selforg {

/// Cost values are exact signed 64-bit integers; all arithmetic on them goes
/// through the checked helpers below.
using Cost = std::int64_t;

namespace checked {

inline Cost add(Cost a, Cost b) {
  Cost r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("cost overflow: " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return r;
}

inline Cost sub(Cost a, Cost b) {
  Cost r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("cost overflow: " + std::to_string(a) + " - " +
                        std::to_string(b));
  }
  return r;
}

inline Cost mul(Cost a, Cost b) {
  Cost r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("cost overflow: " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return r;
}

/// Exact division. Throws IntegralityError when `den` does not divide `num`.
inline Cost div_exact(Cost num, Cost den) {
  if (den == 0) {
    throw InvalidParameterError("division by zero");
  }
  if (num % den != 0) {
    throw IntegralityError(std::to_string(num) + "/" + std::to_string(den) +
                           " is not an integer");
  }
  return num / den;
}

}  // namespace checked
}  // namespace selforg
