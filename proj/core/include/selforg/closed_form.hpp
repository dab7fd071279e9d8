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

#include "selforg/checked.hpp"
#include "selforg/policy.hpp"
#include "selforg/sequence.hpp"

namespace selforg {

/// Exact total access cost predicted by a closed-form result for serving a
/// T1 or T2 sequence on the list (1..n) under the full cost model.
struct Prediction {
  PolicyKind algorithm = PolicyKind::MTF;
  Family family = Family::T1;
  std::int64_t n = 0;
  std::int64_t k = 0;
  /// "1", "2", "3.1a", "3.1b", "3.1c", "3.2a" or "3.2b".
  std::string theorem_case;
  Cost total = 0;

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

// All evaluators require n >= 1 and k >= 1 and throw InvalidParameterError
// otherwise. Intermediate values are exact; a non-integral result throws
// IntegralityError and a result outside int64 throws OverflowError.

/// MTF on (1..n)^k: (n^2 (2k - 1) + n) / 2.
Prediction mtf_t1(std::int64_t n, std::int64_t k);
/// MTF on (n..1)^k: k n^2.
Prediction mtf_t2(std::int64_t n, std::int64_t k);
/// TRANS on (1..n)^k, dispatched on n parity and k against floor(n/2).
Prediction trans_t1(std::int64_t n, std::int64_t k);
/// TRANS on (n..1)^k.
Prediction trans_t2(std::int64_t n, std::int64_t k);

/// Routes to one of the four evaluators. Only MTF/TRANS with T1/T2 are
/// supported.
Prediction predict(PolicyKind algorithm, Family family, std::int64_t n,
                   std::int64_t k);

/// The three regimes of TRANS on T1.
///  A: k <= floor(n/2)          total = k (n^2 + n + k - 1) / 2
///  B: k >  n/2, n even         total = ((n^2 + 2n) / 2) (k - 1/4)
///  C: k >  (n-1)/2, n odd      total = k (n^2 + 2n - 1) / 2 - (n^2 - 1) / 8
enum class TransT1Case { A, B, C };

/// Case selected by trans_t1() for (n, k).
TransT1Case trans_t1_case_for(std::int64_t n, std::int64_t k);

/// Evaluates one case formula without dispatch, so boundaries can be compared.
/// B requires even n and C requires odd n; the k range is not checked.
Cost trans_t1_case(TransT1Case which, std::int64_t n, std::int64_t k);

/// Cost of the i-th pass (1-based) of TRANS on T1: n(n+1)/2 plus
/// min(i - 1, floor(n/2)). The increment grows by one per pass until it
/// saturates.
Cost trans_t1_pass_cost(std::int64_t n, std::int64_t i);

}  // namespace selforg
