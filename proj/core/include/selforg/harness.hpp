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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selforg/closed_form.hpp"
#include "selforg/list_state.hpp"
#include "selforg/policy.hpp"
#include "selforg/sequence.hpp"

namespace selforg {

/// Inclusive integer range [lo, hi].
struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;

  std::int64_t count() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Parses "a..b" (inclusive) or a single integer "a".
IntRange parse_range(const std::string& text);

struct VerificationCell {
  PolicyKind algorithm = PolicyKind::MTF;
  Family family = Family::T1;
  std::int64_t n = 0;
  std::int64_t k = 0;
  Cost simulated = 0;
  Cost predicted = 0;
  bool match = false;
  // Set on mismatch only: first pass (1-based) whose cumulative simulated
  // cost departs from the prediction for that many passes, and the 0-based
  // index of the first request of that pass.
  std::optional<std::int64_t> first_divergent_pass;
  std::optional<std::size_t> first_divergent_request;
};

struct VerificationReport {
  IntRange n_range;
  IntRange k_range;
  CostModel model = CostModel::Full;
  std::size_t pair_count = 0;
  /// Ordered by (algorithm, family, n, k) in the order the inputs list them.
  std::vector<VerificationCell> cells;
  std::size_t mismatch_count = 0;

  bool passed() const noexcept { return mismatch_count == 0; }
  std::size_t cells_per_pair() const noexcept {
    return static_cast<std::size_t>(n_range.count() * k_range.count());
  }
};

/// Predicted total under `model`. The partial model charges one less per
/// request, so its prediction is the full one minus k n.
Cost predicted_total(PolicyKind algorithm, Family family, std::int64_t n,
                     std::int64_t k, CostModel model);

/// Simulates every (algorithm, family, n, k) cell on the list (1..n) and
/// compares it with predicted_total(). Cells are evaluated on up to
/// `threads` workers (0 picks the hardware concurrency); the report order
/// does not depend on scheduling.
VerificationReport verify_grid(std::span<const PolicyKind> algorithms,
                               std::span<const Family> families,
                               IntRange n_range, IntRange k_range,
                               CostModel model, unsigned threads = 0);

/// Signature of predicted_total(); lets callers check an alternative formula
/// against the same simulations.
using Predictor = std::function<Cost(PolicyKind, Family, std::int64_t,
                                     std::int64_t, CostModel)>;

VerificationReport verify_grid(std::span<const PolicyKind> algorithms,
                               std::span<const Family> families,
                               IntRange n_range, IntRange k_range,
                               CostModel model, const Predictor& predictor,
                               unsigned threads = 0);

struct PassProfile {
  std::vector<Cost> pass_costs;
  std::vector<ListState> pass_end_configs;
  Cost total = 0;
};

/// Full-model run of `algorithm` on family(n, k) starting from (1..n).
PassProfile per_pass_profile(PolicyKind algorithm, Family family,
                             std::int64_t n, std::int64_t k);

struct CrossoverResult {
  Family family = Family::T1;
  std::int64_t n = 0;
  /// Smallest k with TRANS strictly cheaper than MTF; empty if none.
  std::optional<std::int64_t> k_star;
  std::int64_t searched_k_max = 0;
  /// TRANS stays strictly cheaper for every k in [k_star, k_max].
  bool dominance_holds = false;
};

/// Scans k = 1..k_max with the closed forms.
CrossoverResult crossover(Family family, std::int64_t n, std::int64_t k_max);

}  // namespace selforg
