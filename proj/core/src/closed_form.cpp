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

#include "selforg/closed_form.hpp"

#include <algorithm>

namespace selforg {
namespace {

using checked::add;
using checked::div_exact;
using checked::mul;
using checked::sub;

void check_nk(std::int64_t n, std::int64_t k) {
  if (n < 1) {
    throw InvalidParameterError("n must be >= 1, got " + std::to_string(n));
  }
  if (k < 1) {
    throw InvalidParameterError("k must be >= 1, got " + std::to_string(k));
  }
}

Prediction make(PolicyKind algo, Family family, std::int64_t n, std::int64_t k,
                std::string label, Cost total) {
  return Prediction{algo, family, n, k, std::move(label), total};
}

}  // namespace

Prediction mtf_t1(std::int64_t n, std::int64_t k) {
  check_nk(n, k);
  const Cost nn = mul(n, n);
  const Cost num = add(mul(nn, sub(mul(2, k), 1)), n);
  return make(PolicyKind::MTF, Family::T1, n, k, "1", div_exact(num, 2));
}

Prediction mtf_t2(std::int64_t n, std::int64_t k) {
  check_nk(n, k);
  return make(PolicyKind::MTF, Family::T2, n, k, "2", mul(k, mul(n, n)));
}

TransT1Case trans_t1_case_for(std::int64_t n, std::int64_t k) {
  check_nk(n, k);
  // floor(n/2) is n/2 for even n and (n-1)/2 for odd n.
  if (k <= n / 2) return TransT1Case::A;
  return n % 2 == 0 ? TransT1Case::B : TransT1Case::C;
}

Cost trans_t1_case(TransT1Case which, std::int64_t n, std::int64_t k) {
  check_nk(n, k);
  const Cost nn = mul(n, n);
  switch (which) {
    case TransT1Case::A: {
      // k * (n^2 + n + k - 1) / 2
      const Cost inner = sub(add(add(nn, n), k), 1);
      return div_exact(mul(k, inner), 2);
    }
    case TransT1Case::B: {
      if (n % 2 != 0) {
        throw InvalidParameterError("case 3.1b requires even n");
      }
      // ((n^2 + 2n) / 2) * ((4k - 1) / 4)
      const Cost a = add(nn, mul(2, n));
      return div_exact(mul(a, sub(mul(4, k), 1)), 8);
    }
    case TransT1Case::C: {
      if (n % 2 == 0) {
        throw InvalidParameterError("case 3.1c requires odd n");
      }
      // k (n^2 + 2n - 1) / 2 - (n^2 - 1) / 8 over the common denominator 8
      const Cost a = sub(add(nn, mul(2, n)), 1);
      const Cost num = sub(mul(mul(4, k), a), sub(nn, 1));
      return div_exact(num, 8);
    }
  }
  throw InvalidParameterError("unknown case");
}

Prediction trans_t1(std::int64_t n, std::int64_t k) {
  const TransT1Case which = trans_t1_case_for(n, k);
  static constexpr const char* kLabels[] = {"3.1a", "3.1b", "3.1c"};
  return make(PolicyKind::TRANS, Family::T1, n, k,
              kLabels[static_cast<int>(which)], trans_t1_case(which, n, k));
}

Prediction trans_t2(std::int64_t n, std::int64_t k) {
  check_nk(n, k);
  const Cost a = add(mul(n, n), mul(2, n));
  if (n % 2 == 0) {
    return make(PolicyKind::TRANS, Family::T2, n, k, "3.2a",
                div_exact(mul(k, a), 2));
  }
  const Cost per_pass = add(div_exact(sub(a, 3), 2), 1);
  return make(PolicyKind::TRANS, Family::T2, n, k, "3.2b", mul(k, per_pass));
}

Prediction predict(PolicyKind algorithm, Family family, std::int64_t n,
                   std::int64_t k) {
  if (algorithm == PolicyKind::MTF && family == Family::T1) return mtf_t1(n, k);
  if (algorithm == PolicyKind::MTF && family == Family::T2) return mtf_t2(n, k);
  if (algorithm == PolicyKind::TRANS && family == Family::T1)
    return trans_t1(n, k);
  if (algorithm == PolicyKind::TRANS && family == Family::T2)
    return trans_t2(n, k);
  throw InvalidParameterError("no closed form for " + to_string(algorithm) +
                              " on " + to_string(family));
}

Cost trans_t1_pass_cost(std::int64_t n, std::int64_t i) {
  check_nk(n, i);
  const Cost first = div_exact(mul(n, add(n, 1)), 2);
  return add(first, std::min<Cost>(i - 1, n / 2));
}

}  // namespace selforg
